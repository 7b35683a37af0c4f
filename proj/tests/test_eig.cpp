#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commdet/error.hpp"
#include "commdet/hermitian_eig.hpp"
#include "commdet/prng.hpp"
#include "commdet/singular_values.hpp"
#include "commdet/spectral.hpp"

#include <cmath>

using namespace commdet;

namespace {

DenseMatrix random_hermitian(int n, SplitMix64& rng) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.unit_square();
    DenseMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

double residual(const DenseMatrix& h, const EigResult& e) {
    const int n = h.dim();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex r = -e.values[k] * e.vectors(i, k);
            for (int j = 0; j < n; ++j) r += h(i, j) * e.vectors(j, k);
            acc += std::norm(r);
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

} // namespace

TEST_CASE("known small systems") {
    SUBCASE("pauli x") {
        DenseMatrix h = DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        EigResult e = hermitian_eig(h);
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("pauli y (complex)") {
        DenseMatrix h = DenseMatrix::from_rows({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
        EigResult e = hermitian_eig(h);
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("already diagonal") {
        DenseMatrix h = DenseMatrix::diagonal({3.0, -2.0, 0.5});
        EigResult e = hermitian_eig(h);
        CHECK(e.values[0] == doctest::Approx(-2.0));
        CHECK(e.values[1] == doctest::Approx(0.5));
        CHECK(e.values[2] == doctest::Approx(3.0));
    }
}

TEST_CASE("residuals and unitarity on random matrices") {
    SplitMix64 rng(11);
    for (int n : {5, 24, 63}) {
        DenseMatrix h = random_hermitian(n, rng);
        EigResult e = hermitian_eig(h, ExecPolicy::Parallel);
        CHECK(residual(h, e) < 1e-10 * std::max(1.0, h.frobenius_norm()));
        DenseMatrix vhv = matmul(e.vectors.adjoint(), e.vectors);
        CHECK((vhv - DenseMatrix::identity(n)).max_abs() < 1e-12);
    }
}

TEST_CASE("serial and parallel orderings agree") {
    SplitMix64 rng(12);
    for (int n : {16, 40, 90}) {
        DenseMatrix h = random_hermitian(n, rng);
        EigResult es = hermitian_eig(h, ExecPolicy::Serial);
        EigResult ep = hermitian_eig(h, ExecPolicy::Parallel);
        for (int k = 0; k < n; ++k)
            CHECK(es.values[k] == doctest::Approx(ep.values[k]).epsilon(1e-11));
    }
}

TEST_CASE("non-hermitian input rejected") {
    DenseMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), Error);
}

TEST_CASE("spectral projector") {
    SUBCASE("diag(-1, 1) at fermi 0") {
        DenseMatrix h = DenseMatrix::diagonal({-1.0, 1.0});
        DenseMatrix p = spectral_projector(h, 0.0);
        CHECK((p - DenseMatrix::diagonal({1.0, 0.0})).max_abs() < 1e-14);
    }
    SUBCASE("fermi below the spectrum gives zero") {
        DenseMatrix h = DenseMatrix::diagonal({0.5, 1.0, 2.0});
        DenseMatrix p = spectral_projector(h, 0.0);
        CHECK(p.max_abs() == 0.0);
    }
    SUBCASE("idempotent, hermitian, commutes with h") {
        SplitMix64 rng(13);
        DenseMatrix h = random_hermitian(30, rng);
        EigResult e = hermitian_eig(h);
        const double fermi = 0.5 * (e.values[14] + e.values[15]);
        DenseMatrix p = spectral_projector(h, fermi);
        CHECK((matmul(p, p) - p).max_abs() < 1e-9);
        CHECK((p - p.adjoint()).max_abs() < 1e-12);
        CHECK(commutator(p, h).max_abs() < 1e-9);
        // rank equals the occupied count
        CHECK(std::abs(p.trace() - Complex(15.0)) < 1e-9);
    }
    SUBCASE("fermi on an eigenvalue rejected") {
        DenseMatrix h = DenseMatrix::diagonal({-1.0, 1.0});
        CHECK_THROWS_AS(spectral_projector(h, 1.0), Error);
    }
}

TEST_CASE("singular values and trace norm") {
    CHECK(trace_norm(DenseMatrix(5)) == 0.0);

    SUBCASE("rank-1 projector has trace norm 1") {
        DenseMatrix p(4);
        p(2, 2) = 1.0;
        CHECK(trace_norm(p) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("diagonal matrix: sum of moduli") {
        DenseMatrix d = DenseMatrix::diagonal({Complex(0, -2), 3.0, Complex(-1, 0)});
        CHECK(trace_norm(d) == doctest::Approx(6.0).epsilon(1e-10));
    }

    SUBCASE("unitary invariance") {
        SplitMix64 rng(14);
        DenseMatrix h = random_hermitian(12, rng);
        EigResult e = hermitian_eig(h);
        double direct = 0.0;
        for (double lam : e.values) direct += std::abs(lam);
        CHECK(trace_norm(h) == doctest::Approx(direct).epsilon(1e-9));
    }
}
