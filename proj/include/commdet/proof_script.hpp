#pragma once

#include "commdet/steinberg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace commdet {

enum class StepKind {
    Merge,
    Split,
    SwapDisjoint,
    PushInner,
    PushInnerInv,
    PushOuter,
    PushOuterInv,
    DeleteZero,
    InsertZero,
    CentralCyclicRotate,
    PermuteIndices,
    SubstituteUnits,
};

const char* step_kind_name(StepKind k);

/// A single rewrite move. `pos` is a 1-based index into the current word for
/// the positional kinds; the remaining fields are per-kind parameters.
struct ProofStep {
    StepKind kind = StepKind::Merge;
    int pos = 0;
    RingElement split_left, split_right; // Split
    int ins_i = 0, ins_j = 0;            // InsertZero
    int rotate_offset = 0;               // CentralCyclicRotate
    std::array<int, 3> perm{1, 2, 3};    // PermuteIndices, images of 1,2,3
    RingElement subst_u, subst_v;        // SubstituteUnits

    bool operator==(const ProofStep&) const = default;
};

/// `strict` demands word-level equality throughout. `det` is accepted for
/// compatibility with determinant-level reasoning; over this ring every
/// discardable term has argument exactly 0, so the two levels admit the same
/// moves and `det` changes nothing.
enum class CheckLevel { Strict, Det };

/// Adjacent-pair relations used by the push moves, with g1 = x_ab(S) and
/// g2 = x_cd(T) the pair at `pos`:
///
///   inner chain (b = c, a != d):  g1 g2 = x_ad(S*T) g2 g1
///   outer chain (a = d, b != c):  g1 g2 = x_cb(-T*S) g2 g1
///
/// PushInner/PushOuter rewrite left-to-right (pair -> triple); the *Inv kinds
/// contract a matching triple back to the pair. Every kind preserves the
/// matrix image exactly, except PermuteIndices and SubstituteUnits which
/// transform it by the induced index/ring map.
StWord apply_step(const StWord& w, const ProofStep& s, CheckLevel level);

/// Script body item: either a rewrite step or an inline expected-word
/// checkpoint.
struct ScriptItem {
    bool is_expect = false;
    ProofStep step;
    StWord expect;

    bool operator==(const ScriptItem&) const = default;
};

struct ProofScript {
    std::string name;
    StWord start;
    StWord target;
    CheckLevel level = CheckLevel::Strict;
    std::vector<ScriptItem> items;

    bool operator==(const ProofScript&) const = default;
};

struct CheckReport {
    bool pass = false;
    int failing_item = 0; // 1-based index into items, 0 when pass or endpoint failure
    std::string reason;
    std::vector<int> word_lengths; // word length after each body item
    std::uint64_t start_fingerprint = 0;
    std::uint64_t target_fingerprint = 0;
    std::string last_word; // rendered word at failure (or final word on pass)
};

/// Runs the script: start word, each step/checkpoint in order, then exact
/// generator-by-generator comparison against the target.
CheckReport check_script(const ProofScript& script);

/// Line-oriented text format. Header lines `start:`, `target:`, `level:`
/// (any order, level optional) followed by one step or `expect:` checkpoint
/// per line. `#` starts a comment. Positions are 1-based.
ProofScript script_parse(std::string_view text, std::string name = "");

std::string script_render(const ProofScript& script);

/// Bundled scripts: "builtin:prop22", "builtin:thm32". Returns the raw text.
const std::string& builtin_script_text(const std::string& name);
std::vector<std::string> builtin_script_names();

} // namespace commdet
