#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

#include <vector>

namespace commdet {

struct EigResult {
    std::vector<double> values; // ascending
    DenseMatrix vectors;        // unitary; column k is the eigenvector of values[k]
};

/// Jacobi eigensolver for Hermitian matrices. The serial policy runs classic
/// cyclic-by-rows sweeps; the parallel policy uses a round-robin ordering in
/// which each round applies a set of disjoint rotations (rows, then columns),
/// which is deterministic for any thread count. Residuals reach
/// ||H x - lambda x|| <= ~1e-13 ||H||.
///
/// Throws Error(NonHermitian) when max|H - H^*| > herm_tol * max(1, max|H|),
/// and Error(NoConvergence) if the off-diagonal norm fails to vanish.
EigResult hermitian_eig(const DenseMatrix& h, ExecPolicy policy,
                        double herm_tol = 1e-10);
inline EigResult hermitian_eig(const DenseMatrix& h) {
    return hermitian_eig(h, default_policy());
}

} // namespace commdet
