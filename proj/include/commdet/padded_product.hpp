#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

#include <functional>
#include <string>
#include <vector>

namespace commdet {

/// A semi-infinite operator on the half-line basis {0, 1, 2, ...} given by an
/// entry function plus a declared off-diagonal decay class. Truncating each
/// factor to a padded dimension and multiplying keeps the leading corner of
/// the product accurate; the decay declaration is what justifies that.
struct SemiInfiniteFactor {
    enum class Decay { Banded, Exponential, Factorial };

    std::string name;
    std::function<Complex(long, long)> entry;
    Decay decay = Decay::Banded;
    double rate = 0.0; // bandwidth for Banded, decay rate otherwise

    DenseMatrix truncate(int dim) const;
};

SemiInfiniteFactor identity_factor();
/// exp(c S) for the unilateral shift S delta_k = delta_{k+1} (lower
/// triangular Toeplitz, entries c^d / d! on subdiagonal d) when lower=true;
/// exp(c S^*) (upper) otherwise.
SemiInfiniteFactor shift_exponential(Complex coef, bool lower);

/// Leading corner x corner block of the product of the factors, evaluated on
/// internal dimension corner+pad and cross-checked against corner+2*pad.
/// Throws Error(PadInsufficient) when the two runs disagree beyond tol on the
/// corner block; the observed difference is reported via err_estimate.
DenseMatrix padded_product(const std::vector<SemiInfiniteFactor>& factors, int corner, int pad,
                           double tol, double* err_estimate, ExecPolicy policy);
inline DenseMatrix padded_product(const std::vector<SemiInfiniteFactor>& factors, int corner,
                                  int pad, double tol, double* err_estimate = nullptr) {
    return padded_product(factors, corner, pad, tol, err_estimate, default_policy());
}

} // namespace commdet
