#include "commdet/ring_eval.hpp"

#include "commdet/error.hpp"
#include "commdet/kernels.hpp"
#include "commdet/lu.hpp"

namespace commdet {

DenseMatrix ring_eval(const RingElement& e, const DenseMatrix& u, const DenseMatrix& v,
                      double kitaev_tol) {
    if (u.dim() != v.dim())
        throw Error(ErrorKind::DimensionMismatch, "ring_eval: dimension mismatch");
    const int n = u.dim();
    if (n == 0) throw Error(ErrorKind::BadArgument, "ring_eval: empty matrices");
    u.check_finite();
    v.check_finite();

    const DenseMatrix id = DenseMatrix::identity(n);
    const DenseMatrix du = u - id;
    const DenseMatrix dv = v - id;
    const double defect =
        std::max(matmul(du, dv).max_abs(), matmul(dv, du).max_abs());
    if (defect > kitaev_tol)
        throw Error(ErrorKind::KitaevViolation,
                    "ring_eval: (U-1)(V-1) deviates from 0 by " + std::to_string(defect));

    DenseMatrix acc(n);
    const double c0 = e.const_coeff().convert_to<double>();
    if (c0 != 0.0) acc += c0 * id;
    for (const auto& [k, c] : e.u_terms())
        acc += c.convert_to<double>() * matrix_power(u, k);
    for (const auto& [k, c] : e.v_terms())
        acc += c.convert_to<double>() * matrix_power(v, k);
    return acc;
}

} // namespace commdet
