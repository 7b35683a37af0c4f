#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commdet/error.hpp"
#include "commdet/prng.hpp"
#include "commdet/proof_script.hpp"
#include "commdet/steinberg.hpp"

using namespace commdet;

namespace {

RingElement U(int k = 1) { return RingElement::u_pow(k); }
RingElement V(int k = 1) { return RingElement::v_pow(k); }
RingElement C(long c) { return RingElement::constant(c); }

RingElement random_arg(SplitMix64& rng) {
    auto nonzero = [&rng](int lo, int hi) {
        int x = 0;
        while (x == 0) x = rng.range(lo, hi);
        return x;
    };
    RingElement e = C(rng.range(-4, 4));
    if (rng.range(0, 1)) e += RingElement::u_pow(nonzero(-2, 2), nonzero(-4, 4));
    if (rng.range(0, 1)) e += RingElement::v_pow(nonzero(-2, 2), nonzero(-4, 4));
    return e;
}

} // namespace

TEST_CASE("st_inverse") {
    StWord w = {st_gen(1, 2, U() - C(1))};
    StWord inv = st_inverse(w);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].arg == C(1) - U());

    CHECK(st_inverse(StWord{}).empty());

    StWord two = {st_gen(1, 2, U() - C(1)), st_gen(2, 1, V() - C(1))};
    StWord itwo = st_inverse(two);
    CHECK(itwo[0] == st_gen(2, 1, C(1) - V()));
    CHECK(itwo[1] == st_gen(1, 2, C(1) - U()));

    SplitMix64 rng(31);
    for (int t = 0; t < 50; ++t) {
        StWord w2;
        for (int k = 0; k < rng.range(0, 6); ++k) {
            int i = rng.range(1, 3), j = rng.range(1, 3);
            while (j == i) j = rng.range(1, 3);
            w2.push_back(StGenerator{i, j, random_arg(rng)});
        }
        CHECK(st_inverse(st_inverse(w2)) == w2);
        CHECK(st_matrix_image(w2) * st_matrix_image(st_inverse(w2)) == RingMatrix3::identity());
    }
}

TEST_CASE("whitehead_d") {
    StWord d12 = whitehead_d(1, 2, U());
    REQUIRE(d12.size() == 4);
    CHECK(d12[0] == st_gen(2, 1, U(-1)));
    CHECK(d12[1] == st_gen(1, 2, C(1) - U()));
    CHECK(d12[2] == st_gen(2, 1, C(-1)));
    CHECK(d12[3] == st_gen(1, 2, C(1) - U(-1)));

    // image is diag(u, u^-1, 1)
    RingMatrix3 img = st_matrix_image(d12);
    RingMatrix3 want;
    want.at(1, 1) = U();
    want.at(2, 2) = U(-1);
    want.at(3, 3) = RingElement::one();
    CHECK(img == want);

    StWord d13 = whitehead_d(1, 3, V());
    CHECK(d13[0] == st_gen(3, 1, V(-1)));
    RingMatrix3 img13 = st_matrix_image(d13);
    CHECK(img13.at(1, 1) == V());
    CHECK(img13.at(3, 3) == V(-1));

    CHECK_THROWS_AS(whitehead_d(1, 2, U() + C(1)), Error);
    CHECK_THROWS_AS(whitehead_d(1, 1, U()), Error);
}

TEST_CASE("steinberg symbol word") {
    StWord w = steinberg_symbol_word();
    CHECK(w.size() == 16);
    CHECK(w[0] == st_gen(2, 1, U(-1)));
    CHECK(st_matrix_image(w).is_identity());
}

TEST_CASE("matrix image basics") {
    StWord single = {st_gen(1, 3, V() - C(1))};
    RingMatrix3 img = st_matrix_image(single);
    CHECK(img.at(1, 3) == V() - C(1));
    CHECK(img.at(1, 1) == RingElement::one());
    CHECK(st_matrix_image(StWord{}).is_identity());

    // the 4-generator commutator target has identity image
    StWord target = parse_word("x12(u-1) x21(v-1) x12(1-u) x21(1-v)");
    CHECK(st_matrix_image(target).is_identity());
}

TEST_CASE("steinberg relation instances hold in the matrix image") {
    SplitMix64 rng(77);
    const int patterns[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    for (int t = 0; t < 1000; ++t) {
        RingElement s = random_arg(rng);
        RingElement tt = random_arg(rng);
        // merge relation on a random slot
        const auto& ij = patterns[rng.range(0, 5)];
        RingMatrix3 lhs = RingMatrix3::elementary(ij[0], ij[1], s) *
                          RingMatrix3::elementary(ij[0], ij[1], tt);
        CHECK(lhs == RingMatrix3::elementary(ij[0], ij[1], s + tt));

        // inner-chain commutation e_ab(S) e_bd(T) = e_ad(ST) e_bd(T) e_ab(S)
        int a = rng.range(1, 3), b = rng.range(1, 3), d = rng.range(1, 3);
        if (a != b && b != d && a != d) {
            RingMatrix3 l = RingMatrix3::elementary(a, b, s) * RingMatrix3::elementary(b, d, tt);
            RingMatrix3 r = RingMatrix3::elementary(a, d, s * tt) *
                            RingMatrix3::elementary(b, d, tt) * RingMatrix3::elementary(a, b, s);
            CHECK(l == r);
            // outer-chain form e_ab(S) e_da(T) = e_db(-TS) e_da(T) e_ab(S)
            RingMatrix3 l2 = RingMatrix3::elementary(a, b, s) * RingMatrix3::elementary(d, a, tt);
            RingMatrix3 r2 = RingMatrix3::elementary(d, b, -(tt * s)) *
                             RingMatrix3::elementary(d, a, tt) * RingMatrix3::elementary(a, b, s);
            CHECK(l2 == r2);
        }
    }
}

TEST_CASE("apply_step examples") {
    SUBCASE("push-outer spelled-out instance") {
        StWord w = parse_word("x12(1-u^-1) x31(v^-1)");
        ProofStep s;
        s.kind = StepKind::PushOuter;
        s.pos = 1;
        StWord r = apply_step(w, s, CheckLevel::Strict);
        CHECK(r == parse_word("x32(u^-1-1) x31(v^-1) x12(1-u^-1)"));
    }

    SUBCASE("merge to zero then delete") {
        StWord w = parse_word("x12(u-1) x12(1-u)");
        ProofStep m;
        m.kind = StepKind::Merge;
        m.pos = 1;
        StWord r = apply_step(w, m, CheckLevel::Strict);
        REQUIRE(r.size() == 1);
        CHECK(r[0].arg.is_zero());
        ProofStep d;
        d.kind = StepKind::DeleteZero;
        d.pos = 1;
        CHECK(apply_step(r, d, CheckLevel::Strict).empty());
    }

    SUBCASE("rotate requires identity image") {
        StWord w = parse_word("x12(u-1)");
        ProofStep s;
        s.kind = StepKind::CentralCyclicRotate;
        s.rotate_offset = 1;
        CHECK_THROWS_AS(apply_step(w, s, CheckLevel::Strict), Error);

        StWord target = parse_word("x12(u-1) x21(v-1) x12(1-u) x21(1-v)");
        s.rotate_offset = 2;
        StWord r = apply_step(target, s, CheckLevel::Strict);
        CHECK(r == parse_word("x12(1-u) x21(1-v) x12(u-1) x21(v-1)"));
    }

    SUBCASE("swap needs disjoint indices") {
        StWord w = parse_word("x12(u) x21(v)");
        ProofStep s;
        s.kind = StepKind::SwapDisjoint;
        s.pos = 1;
        CHECK_THROWS_AS(apply_step(w, s, CheckLevel::Strict), Error);
    }

    SUBCASE("position out of range") {
        StWord w = parse_word("x12(u)");
        ProofStep s;
        s.kind = StepKind::Merge;
        s.pos = 1;
        CHECK_THROWS_AS(apply_step(w, s, CheckLevel::Strict), Error);
        s.pos = 0;
        CHECK_THROWS_AS(apply_step(w, s, CheckLevel::Strict), Error);
    }

    SUBCASE("substitution validates images") {
        StWord w = parse_word("x12(u-1)");
        ProofStep s;
        s.kind = StepKind::SubstituteUnits;
        s.subst_u = V(-1);
        s.subst_v = U();
        StWord r = apply_step(w, s, CheckLevel::Strict);
        CHECK(r == parse_word("x12(v^-1-1)"));

        s.subst_u = U() + C(1); // not a unit
        CHECK_THROWS_AS(apply_step(w, s, CheckLevel::Strict), Error);
    }

    SUBCASE("push inverses undo pushes") {
        StWord w = parse_word("x21(u^-1) x13(1-v)");
        ProofStep push;
        push.kind = StepKind::PushInner;
        push.pos = 1;
        StWord mid = apply_step(w, push, CheckLevel::Strict);
        REQUIRE(mid.size() == 3);
        CHECK(mid[0] == st_gen(2, 3, U(-1) * (C(1) - V())));
        ProofStep pop;
        pop.kind = StepKind::PushInnerInv;
        pop.pos = 1;
        CHECK(apply_step(mid, pop, CheckLevel::Strict) == w);
    }
}

TEST_CASE("merge/split and inszero/delzero invert each other") {
    SplitMix64 rng(123);
    for (int t = 0; t < 200; ++t) {
        StWord w;
        const int len = rng.range(1, 5);
        for (int k = 0; k < len; ++k) {
            int i = rng.range(1, 3), j = rng.range(1, 3);
            while (j == i) j = rng.range(1, 3);
            w.push_back(StGenerator{i, j, random_arg(rng)});
        }
        const int p = rng.range(1, len);
        ProofStep split;
        split.kind = StepKind::Split;
        split.pos = p;
        split.split_left = random_arg(rng);
        split.split_right = w[p - 1].arg - split.split_left;
        StWord after = apply_step(w, split, CheckLevel::Strict);
        ProofStep merge;
        merge.kind = StepKind::Merge;
        merge.pos = p;
        CHECK(apply_step(after, merge, CheckLevel::Strict) == w);

        ProofStep ins;
        ins.kind = StepKind::InsertZero;
        ins.pos = rng.range(1, len + 1);
        ins.ins_i = rng.range(1, 3);
        ins.ins_j = ins.ins_i % 3 + 1;
        StWord with_zero = apply_step(w, ins, CheckLevel::Strict);
        ProofStep del;
        del.kind = StepKind::DeleteZero;
        del.pos = ins.pos;
        CHECK(apply_step(with_zero, del, CheckLevel::Strict) == w);
    }
}
