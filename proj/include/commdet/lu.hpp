#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

namespace commdet {

/// Determinant via partial-pivoted LU; exact permutation-sign accounting.
/// A singular matrix yields 0.
Complex lu_det(const DenseMatrix& m, ExecPolicy policy);
inline Complex lu_det(const DenseMatrix& m) { return lu_det(m, default_policy()); }

/// Solves A X = B. Throws Error(BadArgument) for a numerically singular A.
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b, ExecPolicy policy);
inline DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b) {
    return lu_solve(a, b, default_policy());
}

DenseMatrix inverse(const DenseMatrix& a, ExecPolicy policy);
inline DenseMatrix inverse(const DenseMatrix& a) { return inverse(a, default_policy()); }

/// Integer matrix power; negative exponents invert first.
DenseMatrix matrix_power(const DenseMatrix& a, int k);

} // namespace commdet
