#include "commdet/singular_values.hpp"

#include "commdet/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>

namespace commdet {

std::vector<double> singular_values(const DenseMatrix& t, ExecPolicy policy) {
    const DenseMatrix gram = matmul(t.adjoint(), t, policy);
    EigResult eig = hermitian_eig(gram, policy, 1e-8);
    std::vector<double> sv(eig.values.size());
    for (size_t k = 0; k < sv.size(); ++k)
        sv[k] = std::sqrt(std::max(0.0, eig.values[eig.values.size() - 1 - k]));
    return sv;
}

double trace_norm(const DenseMatrix& t, ExecPolicy policy) {
    double s = 0.0;
    for (double sv : singular_values(t, policy)) s += sv;
    return s;
}

} // namespace commdet
