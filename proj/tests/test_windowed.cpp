#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commdet/error.hpp"
#include "commdet/padded_product.hpp"
#include "commdet/singular_values.hpp"
#include "commdet/windowed.hpp"

#include <cmath>

using namespace commdet;

TEST_CASE("windowed operator invariants") {
    CHECK_THROWS_AS(WindowedOperator({0, 1}, DenseMatrix(3), Tail::identity(), 0.0), Error);
    CHECK_THROWS_AS(WindowedOperator({0}, DenseMatrix(1), Tail::identity(), -1.0), Error);

    WindowedOperator op = WindowedOperator::interval(-3, 3, DenseMatrix::identity(7),
                                                     Tail::identity(), 0.0);
    auto pos = op.central_positions(3);
    // indices -1, 0, 1 occupy positions 2, 3, 4
    CHECK(pos == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(op.central_positions(8), Error);
}

TEST_CASE("fredholm determinant examples") {
    SUBCASE("identity -> 1 exactly") {
        WindowedOperator op = WindowedOperator::interval(-8, 8, DenseMatrix::identity(17),
                                                         Tail::identity(), 0.0);
        DetEstimate est = fredholm_det(op, {3, 9, 17}, 1e-10);
        CHECK(est.value == Complex(1.0));
        CHECK(est.converged);
        CHECK(est.cauchy_gap == 0.0);
    }

    SUBCASE("identity + rank-one projector -> 2") {
        DenseMatrix block = DenseMatrix::identity(17);
        block(8, 8) = 2.0; // lattice index 0
        WindowedOperator op = WindowedOperator::interval(-8, 8, block, Tail::identity(), 0.0);
        DetEstimate est = fredholm_det(op, {1, 5, 17}, 1e-10);
        CHECK(std::abs(est.value - Complex(2.0)) < 1e-14);
        CHECK(est.converged);
    }

    SUBCASE("telescoping diagonal d_{k-1}/d_k -> 1/2") {
        auto d = [](double k) { return 1.5 + 0.5 * std::tanh(k / 4.0); };
        const long h = 129;
        std::vector<Complex> entries;
        for (long k = -h; k <= h; ++k) entries.push_back(d(k - 1.0) / d(k));
        WindowedOperator op = WindowedOperator::interval(
            -h, h, DenseMatrix::diagonal(entries), Tail::diagonal_with_limit(1.0, 1.0), 1e-12);
        DetEstimate est = fredholm_det(op, {65, 129, 257}, 1e-6);
        // telescoping oracle: the product over window [a, b] is d(a-1)/d(b)
        Complex oracle = d(-129.0) / d(128.0);
        CHECK(std::abs(est.value - oracle) < 1e-12);
        CHECK(std::abs(est.value - Complex(0.5)) < 1e-10);
        CHECK(est.converged);
    }

    SUBCASE("tail declarations that are not determinant class") {
        WindowedOperator zero_tail(std::vector<long>{0}, DenseMatrix::identity(1), Tail::zero(),
                                   0.0);
        CHECK_THROWS_AS(fredholm_det(zero_tail, {1}, 1e-8), Error);
        WindowedOperator off_limit = WindowedOperator::interval(
            0, 0, DenseMatrix::identity(1), Tail::diagonal_with_limit(2.0, 1.0), 0.0);
        CHECK_THROWS_AS(fredholm_det(off_limit, {1}, 1e-8), Error);
    }
}

TEST_CASE("trace norm partials") {
    SUBCASE("zero operator") {
        WindowedOperator op = WindowedOperator::interval(-5, 5, DenseMatrix(11),
                                                         Tail::zero(), 0.0);
        for (double s : trace_norm_partials(op, {3, 7, 11})) CHECK(s == 0.0);
    }
    SUBCASE("rank-1 projector saturates at 1") {
        DenseMatrix block(11);
        block(5, 5) = 1.0;
        WindowedOperator op = WindowedOperator::interval(-5, 5, block, Tail::zero(), 0.0);
        auto partials = trace_norm_partials(op, {1, 5, 11});
        CHECK(partials[0] == doctest::Approx(1.0));
        CHECK(partials[2] == doctest::Approx(1.0));
    }
}

TEST_CASE("padded product") {
    SUBCASE("identity factor") {
        DenseMatrix c = padded_product({identity_factor()}, 6, 6, 1e-12);
        CHECK((c - DenseMatrix::identity(6)).max_abs() == 0.0);
    }

    SUBCASE("exp(S) exp(-S) is the identity corner") {
        double err = 0.0;
        DenseMatrix c = padded_product(
            {shift_exponential(1.0, true), shift_exponential(-1.0, true)}, 8, 16, 1e-12, &err);
        CHECK((c - DenseMatrix::identity(8)).max_abs() < 1e-12);
        CHECK(err < 1e-12);
    }

    SUBCASE("four-factor commutator corner has flattening trace-norm partials") {
        const std::vector<SemiInfiniteFactor> fs = {
            shift_exponential(1.0, true),
            shift_exponential(1.0, false),
            shift_exponential(-1.0, true),
            shift_exponential(-1.0, false),
        };
        double err96 = 0.0;
        DenseMatrix w = padded_product(fs, 32, 96, 1e-10, &err96);
        // cross-check at doubled padding
        double err192 = 0.0;
        DenseMatrix w2 = padded_product(fs, 32, 192, 1e-10, &err192);
        CHECK((w - w2).max_abs() < 1e-12);

        DenseMatrix t = w - DenseMatrix::identity(32);
        std::vector<std::vector<int>> windows;
        for (int m : {8, 16, 24, 32}) {
            std::vector<int> idx(m);
            for (int i = 0; i < m; ++i) idx[i] = i;
            windows.push_back(idx);
        }
        auto partials = trace_norm_partials(t, windows, default_policy());
        // the perturbation is corner-supported: the window-8 section already
        // saturates the trace norm
        CHECK(partials[3] > 0.1); // genuinely nontrivial perturbation
        CHECK(partials[3] - partials[0] < 1e-6 * partials[3]);
        CHECK(partials[1] >= partials[0] - 1e-8);
    }

    SUBCASE("insufficient padding is reported") {
        const std::vector<SemiInfiniteFactor> fs = {
            shift_exponential(1.5, true),
            shift_exponential(1.5, false),
            shift_exponential(-1.5, true),
            shift_exponential(-1.5, false),
        };
        CHECK_THROWS_AS(padded_product(fs, 8, 8, 1e-30), Error);
        CHECK_THROWS_AS(padded_product(fs, 8, 4, 1e-8), Error); // pad < corner
    }
}
