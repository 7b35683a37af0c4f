#include "commdet/error.hpp"
#include "commdet/proof_script.hpp"

#include <algorithm>

namespace commdet {

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Merge: return "merge";
        case StepKind::Split: return "split";
        case StepKind::SwapDisjoint: return "swap";
        case StepKind::PushInner: return "push-inner";
        case StepKind::PushInnerInv: return "push-inner-inv";
        case StepKind::PushOuter: return "push-outer";
        case StepKind::PushOuterInv: return "push-outer-inv";
        case StepKind::DeleteZero: return "delzero";
        case StepKind::InsertZero: return "inszero";
        case StepKind::CentralCyclicRotate: return "rotate";
        case StepKind::PermuteIndices: return "perm";
        case StepKind::SubstituteUnits: return "subst";
    }
    return "?";
}

namespace {

[[noreturn]] void illegal(const ProofStep& s, const std::string& why) {
    throw Error(ErrorKind::IllegalStep,
                std::string(step_kind_name(s.kind)) + ": " + why);
}

void need_positions(const StWord& w, const ProofStep& s, int count) {
    if (s.pos < 1 || s.pos + count - 1 > static_cast<int>(w.size()))
        throw Error(ErrorKind::PositionOutOfRange,
                    std::string(step_kind_name(s.kind)) + ": position " +
                        std::to_string(s.pos) + " (+" + std::to_string(count - 1) +
                        ") out of range for word of length " + std::to_string(w.size()));
}

} // namespace

StWord apply_step(const StWord& w, const ProofStep& s, CheckLevel /*level*/) {
    StWord r = w;
    const int p = s.pos - 1; // 0-based
    switch (s.kind) {
        case StepKind::Merge: {
            need_positions(w, s, 2);
            const auto& g1 = w[p];
            const auto& g2 = w[p + 1];
            if (g1.i != g2.i || g1.j != g2.j)
                illegal(s, "adjacent generators occupy different slots");
            r[p].arg = g1.arg + g2.arg;
            r.erase(r.begin() + p + 1);
            return r;
        }
        case StepKind::Split: {
            need_positions(w, s, 1);
            const auto& g = w[p];
            if (!(s.split_left + s.split_right == g.arg))
                illegal(s, "parts " + s.split_left.render() + " | " + s.split_right.render() +
                               " do not sum to " + g.arg.render());
            r[p].arg = s.split_left;
            r.insert(r.begin() + p + 1, StGenerator{g.i, g.j, s.split_right});
            return r;
        }
        case StepKind::SwapDisjoint: {
            need_positions(w, s, 2);
            const auto& g1 = w[p];
            const auto& g2 = w[p + 1];
            if (g1.j == g2.i || g1.i == g2.j)
                illegal(s, "pair " + render_generator(g1) + " " + render_generator(g2) +
                               " is not disjoint");
            std::swap(r[p], r[p + 1]);
            return r;
        }
        case StepKind::PushInner: {
            need_positions(w, s, 2);
            const auto& g1 = w[p];
            const auto& g2 = w[p + 1];
            if (g1.j != g2.i)
                illegal(s, "inner indices do not chain");
            if (g1.i == g2.j)
                illegal(s, "x_ab x_ba pair admits no push relation");
            StGenerator comm{g1.i, g2.j, g1.arg * g2.arg};
            r[p] = comm;
            r[p + 1] = g2;
            r.insert(r.begin() + p + 2, g1);
            return r;
        }
        case StepKind::PushOuter: {
            need_positions(w, s, 2);
            const auto& g1 = w[p];
            const auto& g2 = w[p + 1];
            if (g1.i != g2.j)
                illegal(s, "outer indices do not chain");
            if (g1.j == g2.i)
                illegal(s, "x_ab x_ba pair admits no push relation");
            StGenerator comm{g2.i, g1.j, -(g2.arg * g1.arg)};
            r[p] = comm;
            r[p + 1] = g2;
            r.insert(r.begin() + p + 2, g1);
            return r;
        }
        case StepKind::PushInnerInv: {
            need_positions(w, s, 3);
            const auto& h = w[p];
            const auto& g2 = w[p + 1];
            const auto& g1 = w[p + 2];
            if (g1.j != g2.i || g1.i == g2.j)
                illegal(s, "trailing pair does not form an inner chain");
            if (h.i != g1.i || h.j != g2.j)
                illegal(s, "leading generator sits in the wrong slot");
            if (!(h.arg == g1.arg * g2.arg))
                illegal(s, "leading argument " + h.arg.render() + " != product " +
                               (g1.arg * g2.arg).render());
            r[p] = g1;
            r[p + 1] = g2;
            r.erase(r.begin() + p + 2);
            return r;
        }
        case StepKind::PushOuterInv: {
            need_positions(w, s, 3);
            const auto& h = w[p];
            const auto& g2 = w[p + 1];
            const auto& g1 = w[p + 2];
            if (g1.i != g2.j || g1.j == g2.i)
                illegal(s, "trailing pair does not form an outer chain");
            if (h.i != g2.i || h.j != g1.j)
                illegal(s, "leading generator sits in the wrong slot");
            if (!(h.arg == -(g2.arg * g1.arg)))
                illegal(s, "leading argument " + h.arg.render() + " != -product " +
                               (-(g2.arg * g1.arg)).render());
            r[p] = g1;
            r[p + 1] = g2;
            r.erase(r.begin() + p + 2);
            return r;
        }
        case StepKind::DeleteZero: {
            need_positions(w, s, 1);
            if (!w[p].arg.is_zero())
                illegal(s, "argument is " + w[p].arg.render() + ", not 0");
            r.erase(r.begin() + p);
            return r;
        }
        case StepKind::InsertZero: {
            if (s.pos < 1 || s.pos > static_cast<int>(w.size()) + 1)
                throw Error(ErrorKind::PositionOutOfRange,
                            "inszero: position " + std::to_string(s.pos) +
                                " out of range for word of length " + std::to_string(w.size()));
            if (s.ins_i < 1 || s.ins_i > 3 || s.ins_j < 1 || s.ins_j > 3 || s.ins_i == s.ins_j)
                illegal(s, "indices must be distinct and in 1..3");
            r.insert(r.begin() + p, StGenerator{s.ins_i, s.ins_j, RingElement{}});
            return r;
        }
        case StepKind::CentralCyclicRotate: {
            if (w.empty()) return r;
            if (!st_matrix_image(w).is_identity())
                illegal(s, "matrix image is not the identity; cyclic rotation needs a "
                           "kernel (central) word");
            const int n = static_cast<int>(w.size());
            int k = ((s.rotate_offset % n) + n) % n;
            std::rotate(r.begin(), r.begin() + k, r.end());
            return r;
        }
        case StepKind::PermuteIndices: {
            std::array<bool, 4> seen{};
            for (int x : s.perm) {
                if (x < 1 || x > 3 || seen[x]) illegal(s, "not a bijection of {1,2,3}");
                seen[x] = true;
            }
            for (auto& g : r) {
                g.i = s.perm[g.i - 1];
                g.j = s.perm[g.j - 1];
            }
            return r;
        }
        case StepKind::SubstituteUnits: {
            if (!s.subst_u.unit_inverse())
                illegal(s, "image of u is not a unit: " + s.subst_u.render());
            if (!s.subst_v.unit_inverse())
                illegal(s, "image of v is not a unit: " + s.subst_v.render());
            const RingElement one = RingElement::one();
            if (!((s.subst_u - one) * (s.subst_v - one)).is_zero() ||
                !((s.subst_v - one) * (s.subst_u - one)).is_zero())
                illegal(s, "unit images violate the defining relation");
            for (auto& g : r) g.arg = g.arg.substituted(s.subst_u, s.subst_v);
            return r;
        }
    }
    illegal(s, "unknown step kind");
}

CheckReport check_script(const ProofScript& script) {
    CheckReport rep;
    rep.start_fingerprint = st_matrix_image(script.start).fingerprint();
    rep.target_fingerprint = st_matrix_image(script.target).fingerprint();

    if (!word_is_zero_free(script.start)) {
        rep.reason = "start word contains a zero-argument generator";
        rep.last_word = render_word(script.start);
        return rep;
    }
    if (!word_is_zero_free(script.target)) {
        rep.reason = "target word contains a zero-argument generator";
        rep.last_word = render_word(script.target);
        return rep;
    }

    StWord cur = script.start;
    int idx = 0;
    for (const auto& item : script.items) {
        ++idx;
        if (item.is_expect) {
            if (!(cur == item.expect)) {
                rep.failing_item = idx;
                rep.reason = "checkpoint mismatch: expected [" + render_word(item.expect) +
                             "], got [" + render_word(cur) + "]";
                rep.last_word = render_word(cur);
                return rep;
            }
        } else {
            try {
                cur = apply_step(cur, item.step, script.level);
            } catch (const Error& e) {
                rep.failing_item = idx;
                rep.reason = e.what();
                rep.last_word = render_word(cur);
                return rep;
            }
        }
        rep.word_lengths.push_back(static_cast<int>(cur.size()));
    }

    if (!(cur == script.target)) {
        rep.reason = "final word [" + render_word(cur) + "] differs from target [" +
                     render_word(script.target) + "]";
        rep.last_word = render_word(cur);
        return rep;
    }
    rep.pass = true;
    rep.last_word = render_word(cur);
    return rep;
}

} // namespace commdet
