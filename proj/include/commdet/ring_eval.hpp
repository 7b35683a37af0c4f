#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/ring.hpp"

namespace commdet {

/// Substitutes concrete matrices for u, v in the normal form. The pair must
/// be square, equal-dimension, invertible, and satisfy the defining relation
/// (U-1)(V-1) = 0 = (V-1)(U-1) within `kitaev_tol` (max-abs entrywise);
/// under that precondition the substitution is a ring homomorphism.
DenseMatrix ring_eval(const RingElement& e, const DenseMatrix& u, const DenseMatrix& v,
                      double kitaev_tol = 1e-12);

} // namespace commdet
