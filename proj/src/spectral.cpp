#include "commdet/spectral.hpp"

#include "commdet/error.hpp"
#include "commdet/kernels.hpp"

#include <cmath>

namespace commdet {

DenseMatrix spectral_projector(const EigResult& eig, double fermi, ExecPolicy policy,
                               double fermi_tol) {
    std::vector<int> occupied;
    for (size_t k = 0; k < eig.values.size(); ++k) {
        if (std::abs(eig.values[k] - fermi) < fermi_tol)
            throw Error(ErrorKind::FermiOnEigenvalue,
                        "spectral_projector: fermi level " + std::to_string(fermi) +
                            " within " + std::to_string(fermi_tol) + " of eigenvalue " +
                            std::to_string(eig.values[k]));
        if (eig.values[k] < fermi) occupied.push_back(static_cast<int>(k));
    }
    return projector_from_columns(eig.vectors, occupied, policy);
}

DenseMatrix spectral_projector(const DenseMatrix& h, double fermi, ExecPolicy policy,
                               double fermi_tol) {
    EigResult eig = hermitian_eig(h, policy, 1e-10);
    return spectral_projector(eig, fermi, policy, fermi_tol);
}

} // namespace commdet
