#include "commdet/matrix_exp.hpp"

#include "commdet/lu.hpp"

#include <cmath>

namespace commdet {

namespace {

// Pade(13,13) numerator coefficients (Higham 2005).
constexpr double kB13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0,
};
constexpr double kTheta13 = 5.371920351148152;

} // namespace

DenseMatrix mat_exp(const DenseMatrix& m, ExecPolicy policy) {
    const int n = m.dim();
    if (n == 0) return m;

    const double norm = m.one_norm();
    int squarings = 0;
    if (norm > kTheta13)
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));

    DenseMatrix a = m;
    if (squarings > 0) a *= std::ldexp(1.0, -squarings);

    const DenseMatrix id = DenseMatrix::identity(n);
    const DenseMatrix a2 = matmul(a, a, policy);
    const DenseMatrix a4 = matmul(a2, a2, policy);
    const DenseMatrix a6 = matmul(a4, a2, policy);

    // U = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    DenseMatrix tmp = kB13[13] * a6 + kB13[11] * a4 + kB13[9] * a2;
    DenseMatrix u = matmul(a6, tmp, policy);
    u += kB13[7] * a6 + kB13[5] * a4 + kB13[3] * a2 + kB13[1] * id;
    u = matmul(a, u, policy);

    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    tmp = kB13[12] * a6 + kB13[10] * a4 + kB13[8] * a2;
    DenseMatrix v = matmul(a6, tmp, policy);
    v += kB13[6] * a6 + kB13[4] * a4 + kB13[2] * a2 + kB13[0] * id;

    DenseMatrix num = v + u;
    DenseMatrix den = v - u;
    DenseMatrix r = lu_solve(den, num, policy);

    for (int s = 0; s < squarings; ++s) r = matmul(r, r, policy);
    return r;
}

} // namespace commdet
