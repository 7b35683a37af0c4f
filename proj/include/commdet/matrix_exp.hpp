#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

namespace commdet {

/// Matrix exponential by scaling-and-squaring with a degree-13 Pade
/// approximant. Relative accuracy ~1e-13 for one-norms up to ~10.
DenseMatrix mat_exp(const DenseMatrix& m, ExecPolicy policy);
inline DenseMatrix mat_exp(const DenseMatrix& m) { return mat_exp(m, default_policy()); }

} // namespace commdet
