#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

#include <vector>

namespace commdet {

/// Singular values, descending, computed from the Hermitian eigenproblem of
/// T^* T. Adequate for trace-norm diagnostics (absolute accuracy
/// ~1e-8 * ||T||^2 for the small values).
std::vector<double> singular_values(const DenseMatrix& t, ExecPolicy policy);
inline std::vector<double> singular_values(const DenseMatrix& t) {
    return singular_values(t, default_policy());
}

/// Sum of singular values.
double trace_norm(const DenseMatrix& t, ExecPolicy policy);
inline double trace_norm(const DenseMatrix& t) { return trace_norm(t, default_policy()); }

} // namespace commdet
