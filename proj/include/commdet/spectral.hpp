#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/hermitian_eig.hpp"

namespace commdet {

/// Orthogonal projector onto the eigenspaces of `h` with eigenvalue below
/// `fermi`. Throws Error(FermiOnEigenvalue) when the level sits within
/// `fermi_tol` of the spectrum and Error(NonHermitian) for a non-Hermitian
/// input.
DenseMatrix spectral_projector(const DenseMatrix& h, double fermi,
                               ExecPolicy policy, double fermi_tol = 1e-8);
inline DenseMatrix spectral_projector(const DenseMatrix& h, double fermi) {
    return spectral_projector(h, fermi, default_policy());
}

/// Same, from an already-computed eigendecomposition.
DenseMatrix spectral_projector(const EigResult& eig, double fermi,
                               ExecPolicy policy, double fermi_tol = 1e-8);

} // namespace commdet
