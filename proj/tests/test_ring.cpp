#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commdet/error.hpp"
#include "commdet/prng.hpp"
#include "commdet/ring.hpp"
#include "commdet/ring_eval.hpp"
#include "commdet/verify.hpp"

#include <vector>

using namespace commdet;

namespace {

RingElement U(int k = 1) { return RingElement::u_pow(k); }
RingElement V(int k = 1) { return RingElement::v_pow(k); }
RingElement C(long c) { return RingElement::constant(c); }

// Letters are u^{+-1}, v^{+-1}. The oracle multiplies a letter into an
// element using only the local rules (power merge for the same symbol, the
// x*y -> x+y-1 collapse for mixed symbols) extended linearly, with no appeal
// to the engine's general product.
struct Letter {
    char sym; // 'u' or 'v'
    int exp;  // +1 or -1
};

RingElement letter_times(const Letter& l, const RingElement& e) {
    RingElement out;
    auto letter_atom = [&](char sym, int k) {
        return sym == 'u' ? RingElement::u_pow(k) : RingElement::v_pow(k);
    };
    // letter times the constant part
    out += RingElement::constant(e.const_coeff()) * letter_atom(l.sym, l.exp);

    for (const auto& [k, c] : e.u_terms()) {
        if (l.sym == 'u') {
            // u^a u^k -> u^{a+k}
            out += RingElement::u_pow(l.exp + k, c);
        } else {
            // v^a u^k -> u^k + v^a - 1, scaled by c
            RingElement t = RingElement::u_pow(k) + RingElement::v_pow(l.exp) - RingElement::one();
            out += RingElement::constant(c) * t;
        }
    }
    for (const auto& [k, c] : e.v_terms()) {
        if (l.sym == 'v') {
            out += RingElement::v_pow(l.exp + k, c);
        } else {
            RingElement t = RingElement::v_pow(k) + RingElement::u_pow(l.exp) - RingElement::one();
            out += RingElement::constant(c) * t;
        }
    }
    return out;
}

// All ways to evaluate the word by repeatedly absorbing the leftmost or
// rightmost letter (commutativity makes letter_times usable on both ends).
void eval_orders(const std::vector<Letter>& word, size_t lo, size_t hi, const RingElement& acc,
                 std::vector<RingElement>& results) {
    if (lo > hi) {
        results.push_back(acc);
        return;
    }
    eval_orders(word, lo + 1, hi, letter_times(word[lo], acc), results);
    if (hi > lo) eval_orders(word, lo, hi - 1, letter_times(word[hi], acc), results);
}

std::vector<RingElement> all_rewrite_routes(const std::vector<Letter>& word) {
    std::vector<RingElement> results;
    eval_orders(word, 0, word.size() - 1, RingElement::one(), results);
    return results;
}

} // namespace

TEST_CASE("addition examples") {
    CHECK((U() - C(1)) + (C(1) - U()) == RingElement{});
    CHECK(C(1) + (U() - C(1)) == U());
    // coefficient-wise oracle: (u + v - 1) + (u - v) has u:2, v:0, const:-1
    RingElement sum = (U() + V() - C(1)) + (U() - V());
    RingElement expect = RingElement::u_pow(1, 2) - C(1);
    CHECK(sum == expect);
}

TEST_CASE("multiplication examples") {
    CHECK(((U() - C(1)) * (V() - C(1))).is_zero());
    CHECK(((V() - C(1)) * (U() - C(1))).is_zero());
    CHECK(U() * U(-1) == RingElement::one());

    SUBCASE("u^2 v^-1 collapses, all rewrite routes agree") {
        std::vector<Letter> word = {{'u', 1}, {'u', 1}, {'v', -1}};
        RingElement expect = U(2) + V(-1) - C(1);
        for (const auto& r : all_rewrite_routes(word)) CHECK(r == expect);
        CHECK(U() * U() * V(-1) == expect);
    }

    SUBCASE("bilinear expansion (2 + u)(3v) = 3u + 9v - 3") {
        RingElement lhs = (C(2) + U()) * RingElement::v_pow(1, 3);
        RingElement expect = RingElement::u_pow(1, 3) + RingElement::v_pow(1, 9) - C(3);
        CHECK(lhs == expect);
    }
}

TEST_CASE("mixed-rule confluence on random letter words") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> word;
        const int len = rng.range(1, 5);
        RingElement direct = RingElement::one();
        for (int k = 0; k < len; ++k) {
            Letter l{rng.range(0, 1) ? 'u' : 'v', rng.range(0, 1) ? 1 : -1};
            word.push_back(l);
            direct = direct * (l.sym == 'u' ? U(l.exp) : V(l.exp));
        }
        for (const auto& r : all_rewrite_routes(word)) CHECK(r == direct);
    }
}

TEST_CASE("kitaev ideal for all small powers") {
    for (int a = -3; a <= 3; ++a) {
        if (a == 0) continue;
        for (int b = -3; b <= 3; ++b) {
            if (b == 0) continue;
            CHECK(((U(a) - C(1)) * (V(b) - C(1))).is_zero());
            CHECK(((V(b) - C(1)) * (U(a) - C(1))).is_zero());
        }
    }
    // absorption: (u-1)v = u-1 exactly, all sign/inverse variants
    CHECK((U() - C(1)) * V() == U() - C(1));
    CHECK((U() - C(1)) * V(-1) == U() - C(1));
    CHECK((V() - C(1)) * U() == V() - C(1));
    CHECK((V(-2) - C(1)) * U(3) == V(-2) - C(1));
}

TEST_CASE("unit inverses") {
    CHECK(U(2).unit_inverse().value() == U(-2));
    CHECK((-V(1)).unit_inverse().value() == -V(-1));
    CHECK(C(-1).unit_inverse().value() == C(-1));
    // uv = u + v - 1 is a unit with inverse u^-1 + v^-1 - 1
    RingElement uv = U() * V();
    RingElement inv = uv.unit_inverse().value();
    CHECK(uv * inv == RingElement::one());
    CHECK(!(U() + C(1)).unit_inverse().has_value());
    CHECK(!(RingElement::u_pow(1, 2)).unit_inverse().has_value());
    CHECK_THROWS_AS((U() + C(1)).unit_power(-1), Error);
}

TEST_CASE("substitution endomorphism") {
    RingElement e = U() - C(1);
    CHECK(e.substituted(V(-1), U()) == V(-1) - C(1));
    RingElement f = C(1) - U(-1);
    CHECK(f.substituted(V(-1), U()) == C(1) - V());
}

TEST_CASE("parse and render") {
    CHECK(RingElement::parse("u - 1") == U() - C(1));
    CHECK(RingElement::parse("3u + 9v - 3") == (C(2) + U()) * RingElement::v_pow(1, 3));
    CHECK(RingElement::parse("u^-1") == U(-1));
    CHECK(RingElement::parse("0") == RingElement{});
    CHECK(RingElement::parse("2u^-3-4v^2") == RingElement::u_pow(-3, 2) - RingElement::v_pow(2, 4));

    CHECK((U() - C(1)).render() == "-1+u");
    CHECK((C(1) - U(-1)).render() == "1-u^-1");
    CHECK(RingElement{}.render() == "0");

    CHECK_THROWS_AS(RingElement::parse("u^0"), ParseError);
    CHECK_THROWS_AS(RingElement::parse("u*v"), ParseError);
    CHECK_THROWS_AS(RingElement::parse("u v"), ParseError);
    CHECK_THROWS_AS(RingElement::parse(""), ParseError);
    CHECK_THROWS_AS(RingElement::parse("3 +"), ParseError);

    try {
        RingElement::parse("1 + u^0");
    } catch (const ParseError& e) {
        CHECK(e.column() > 4); // position points into the exponent
    }
}

TEST_CASE("round-trip on random elements") {
    SplitMix64 rng(99);
    auto nonzero = [&rng](int lo, int hi) {
        int x = 0;
        while (x == 0) x = rng.range(lo, hi);
        return x;
    };
    for (int t = 0; t < 500; ++t) {
        RingElement e = C(rng.range(-9, 9));
        for (int k = 0; k < rng.range(0, 3); ++k)
            e += RingElement::u_pow(nonzero(-3, 3), nonzero(-9, 9));
        for (int k = 0; k < rng.range(0, 3); ++k)
            e += RingElement::v_pow(nonzero(-3, 3), nonzero(-9, 9));
        CHECK(RingElement::parse(e.render()) == e);
    }
}

TEST_CASE("seeded property suite") {
    auto [ok, detail] = ring_property_suite(2000, 7);
    INFO(detail);
    CHECK(ok);
}

TEST_CASE("ring_eval on block pairs") {
    // U - 1 and V - 1 supported on orthogonal blocks: U = diag(A, I),
    // V = diag(I, B).
    const int na = 2, nb = 2, n = na + nb;
    DenseMatrix u = DenseMatrix::identity(n);
    u(0, 0) = Complex(2.0, 1.0);
    u(0, 1) = Complex(0.5, 0.0);
    u(1, 1) = Complex(1.0, -1.0);
    DenseMatrix v = DenseMatrix::identity(n);
    v(2, 2) = Complex(0.0, 1.0);
    v(3, 2) = Complex(-0.25, 0.0);
    v(3, 3) = Complex(3.0, 0.0);

    SUBCASE("constants and zero") {
        CHECK((ring_eval(RingElement::one(), u, v) - DenseMatrix::identity(n)).max_abs() == 0.0);
        RingElement zero = (U() - C(1)) * (V() - C(1));
        CHECK(ring_eval(zero, u, v).max_abs() == 0.0);
    }

    SUBCASE("uv evaluates to U + V - I") {
        DenseMatrix lhs = ring_eval(U() * V(), u, v);
        DenseMatrix rhs = u + v - DenseMatrix::identity(n);
        CHECK((lhs - rhs).max_abs() < 1e-12);
    }

    SUBCASE("homomorphism on random elements") {
        SplitMix64 rng(5);
        auto nonzero = [&rng](int lo, int hi) {
            int x = 0;
            while (x == 0) x = rng.range(lo, hi);
            return x;
        };
        for (int t = 0; t < 25; ++t) {
            RingElement a = C(rng.range(-3, 3));
            RingElement b = C(rng.range(-3, 3));
            a += RingElement::u_pow(nonzero(-2, 2), nonzero(-3, 3));
            b += RingElement::v_pow(nonzero(-2, 2), nonzero(-3, 3));
            DenseMatrix lhs = ring_eval(a * b, u, v);
            DenseMatrix rhs = matmul(ring_eval(a, u, v), ring_eval(b, u, v));
            CHECK((lhs - rhs).max_abs() < 1e-10);
        }
    }

    SUBCASE("kitaev violation rejected") {
        DenseMatrix w = DenseMatrix::identity(n);
        w(0, 0) = 2.0;
        CHECK_THROWS_AS(ring_eval(U() * V(), w, w), Error);
    }

    SUBCASE("dimension mismatch rejected") {
        DenseMatrix small = DenseMatrix::identity(2);
        CHECK_THROWS_AS(ring_eval(U(), u, small), Error);
    }
}
