#pragma once

#include "commdet/dense_matrix.hpp"

#include <vector>

namespace commdet {

/// Serial runs the plain reference loop; Parallel uses the OpenMP kernels.
/// Both produce bitwise-identical results: every output element is
/// accumulated by a single thread in a fixed order, so the parallel kernels
/// are deterministic regardless of thread count.
enum class ExecPolicy { Serial, Parallel };

ExecPolicy default_policy();
void set_default_policy(ExecPolicy p);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b,
                   ExecPolicy policy);
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    return matmul(a, b, default_policy());
}
inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    return matmul(a, b);
}

/// P = sum over selected columns k of V: v_k v_k^* (orthogonal projector when
/// the columns are orthonormal).
DenseMatrix projector_from_columns(const DenseMatrix& v, const std::vector<int>& columns,
                                   ExecPolicy policy);
inline DenseMatrix projector_from_columns(const DenseMatrix& v, const std::vector<int>& cols) {
    return projector_from_columns(v, cols, default_policy());
}

inline DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) {
    return matmul(a, b) - matmul(b, a);
}

} // namespace commdet
