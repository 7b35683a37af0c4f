#include "commdet/padded_product.hpp"

#include "commdet/error.hpp"

#include <cmath>

namespace commdet {

DenseMatrix SemiInfiniteFactor::truncate(int dim) const {
    DenseMatrix m(dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) m(static_cast<int>(i), static_cast<int>(j)) = entry(i, j);
    m.check_finite();
    return m;
}

SemiInfiniteFactor identity_factor() {
    SemiInfiniteFactor f;
    f.name = "identity";
    f.entry = [](long i, long j) { return i == j ? Complex(1.0) : Complex(0.0); };
    f.decay = SemiInfiniteFactor::Decay::Banded;
    f.rate = 0.0;
    return f;
}

SemiInfiniteFactor shift_exponential(Complex coef, bool lower) {
    SemiInfiniteFactor f;
    f.name = lower ? "exp(c*S)" : "exp(c*S^*)";
    f.entry = [coef, lower](long i, long j) -> Complex {
        const long d = lower ? i - j : j - i;
        if (d < 0) return 0.0;
        // coef^d / d!, built multiplicatively.
        Complex t = 1.0;
        for (long k = 1; k <= d; ++k) t *= coef / static_cast<double>(k);
        return t;
    };
    f.decay = SemiInfiniteFactor::Decay::Factorial;
    f.rate = std::abs(coef);
    return f;
}

namespace {

DenseMatrix product_corner(const std::vector<SemiInfiniteFactor>& factors, int corner, int dim,
                           ExecPolicy policy) {
    DenseMatrix acc = DenseMatrix::identity(dim);
    for (const auto& f : factors) acc = matmul(acc, f.truncate(dim), policy);
    return acc.leading_block(corner);
}

} // namespace

DenseMatrix padded_product(const std::vector<SemiInfiniteFactor>& factors, int corner, int pad,
                           double tol, double* err_estimate, ExecPolicy policy) {
    if (corner < 1) throw Error(ErrorKind::BadArgument, "padded_product: corner must be >= 1");
    if (pad < corner)
        throw Error(ErrorKind::BadArgument, "padded_product: pad must be >= corner");
    if (factors.empty())
        throw Error(ErrorKind::BadArgument, "padded_product: no factors");

    DenseMatrix run1 = product_corner(factors, corner, corner + pad, policy);
    DenseMatrix run2 = product_corner(factors, corner, corner + 2 * pad, policy);
    const double diff = (run1 - run2).max_abs();
    if (err_estimate) *err_estimate = diff;
    if (diff > tol)
        throw Error(ErrorKind::PadInsufficient,
                    "padded_product: pad vs 2*pad corner blocks differ by " +
                        std::to_string(diff));
    return run1;
}

} // namespace commdet
