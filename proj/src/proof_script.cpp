#include "commdet/error.hpp"
#include "commdet/proof_script.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace commdet {

namespace {

std::string trim(std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

struct LineParser {
    std::string line;
    int lineno;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("script line " + std::to_string(lineno) + ": " + what, lineno,
                         static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= line.size();
    }

    std::string token() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (start == pos) fail("expected a token");
        return line.substr(start, pos - start);
    }

    int position_arg() {
        std::string t = token();
        if (t.size() < 2 || t[0] != '@') fail("expected '@<position>', got '" + t + "'");
        try {
            size_t used = 0;
            int p = std::stoi(t.substr(1), &used);
            if (used != t.size() - 1) fail("bad position '" + t + "'");
            return p;
        } catch (const std::exception&) {
            fail("bad position '" + t + "'");
        }
    }

    std::string rest() {
        skip_ws();
        return line.substr(pos);
    }
};

RingElement parse_ring_at(LineParser& lp, const std::string& text) {
    try {
        return RingElement::parse(text);
    } catch (const ParseError& e) {
        lp.fail(std::string(e.what()));
    }
}

StWord parse_word_at(LineParser& lp, const std::string& text) {
    try {
        return parse_word(text);
    } catch (const ParseError& e) {
        lp.fail(std::string(e.what()));
    }
}

std::pair<int, int> parse_slot(LineParser& lp, const std::string& t) {
    if (t.size() != 3 || t[0] != 'x' || !std::isdigit(static_cast<unsigned char>(t[1])) ||
        !std::isdigit(static_cast<unsigned char>(t[2])))
        lp.fail("expected slot 'xij', got '" + t + "'");
    int i = t[1] - '0', j = t[2] - '0';
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        lp.fail("slot indices must be distinct and in 1..3");
    return {i, j};
}

ProofStep parse_step_line(LineParser& lp, const std::string& head) {
    ProofStep s;
    if (head == "merge") {
        s.kind = StepKind::Merge;
        s.pos = lp.position_arg();
    } else if (head == "split") {
        s.kind = StepKind::Split;
        s.pos = lp.position_arg();
        std::string rest = lp.rest();
        size_t bar = rest.find('|');
        if (bar == std::string::npos) lp.fail("split needs '<arg>|<arg>'");
        s.split_left = parse_ring_at(lp, trim(rest.substr(0, bar)));
        s.split_right = parse_ring_at(lp, trim(rest.substr(bar + 1)));
        return s;
    } else if (head == "swap") {
        s.kind = StepKind::SwapDisjoint;
        s.pos = lp.position_arg();
    } else if (head == "push-inner") {
        s.kind = StepKind::PushInner;
        s.pos = lp.position_arg();
    } else if (head == "push-inner-inv") {
        s.kind = StepKind::PushInnerInv;
        s.pos = lp.position_arg();
    } else if (head == "push-outer") {
        s.kind = StepKind::PushOuter;
        s.pos = lp.position_arg();
    } else if (head == "push-outer-inv") {
        s.kind = StepKind::PushOuterInv;
        s.pos = lp.position_arg();
    } else if (head == "delzero") {
        s.kind = StepKind::DeleteZero;
        s.pos = lp.position_arg();
    } else if (head == "inszero") {
        s.kind = StepKind::InsertZero;
        s.pos = lp.position_arg();
        auto [i, j] = parse_slot(lp, lp.token());
        s.ins_i = i;
        s.ins_j = j;
    } else if (head == "rotate") {
        s.kind = StepKind::CentralCyclicRotate;
        std::string t = lp.token();
        if (t.rfind("k=", 0) != 0) lp.fail("rotate needs 'k=<int>'");
        try {
            size_t used = 0;
            s.rotate_offset = std::stoi(t.substr(2), &used);
            if (used != t.size() - 2) lp.fail("bad rotate offset '" + t + "'");
        } catch (const std::exception&) {
            lp.fail("bad rotate offset '" + t + "'");
        }
    } else if (head == "perm") {
        s.kind = StepKind::PermuteIndices;
        std::string rest = trim(lp.rest());
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            lp.fail("perm needs '(<s1> <s2> <s3>)'");
        std::istringstream in(rest.substr(1, rest.size() - 2));
        for (int k = 0; k < 3; ++k) {
            if (!(in >> s.perm[k])) lp.fail("perm needs three images");
        }
        int extra;
        if (in >> extra) lp.fail("perm takes exactly three images");
        return s;
    } else if (head == "subst") {
        s.kind = StepKind::SubstituteUnits;
        for (int k = 0; k < 2; ++k) {
            std::string t = lp.token();
            if (t.rfind("u->", 0) == 0) {
                s.subst_u = parse_ring_at(lp, t.substr(3));
            } else if (t.rfind("v->", 0) == 0) {
                s.subst_v = parse_ring_at(lp, t.substr(3));
            } else {
                lp.fail("subst needs 'u-><unit> v-><unit>'");
            }
        }
    } else {
        lp.fail("unknown step '" + head + "'");
    }
    if (!lp.done()) lp.fail("trailing input '" + lp.rest() + "'");
    return s;
}

} // namespace

ProofScript script_parse(std::string_view text, std::string name) {
    ProofScript script;
    script.name = std::move(name);
    bool have_start = false, have_target = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string body = trim(raw);
        if (body.empty()) continue;

        LineParser lp{body, lineno};
        if (body.rfind("start:", 0) == 0) {
            if (have_start) lp.fail("duplicate start");
            script.start = parse_word_at(lp, trim(body.substr(6)));
            have_start = true;
            continue;
        }
        if (body.rfind("target:", 0) == 0) {
            if (have_target) lp.fail("duplicate target");
            script.target = parse_word_at(lp, trim(body.substr(7)));
            have_target = true;
            continue;
        }
        if (body.rfind("level:", 0) == 0) {
            std::string lvl = trim(body.substr(6));
            if (lvl == "strict") script.level = CheckLevel::Strict;
            else if (lvl == "det") script.level = CheckLevel::Det;
            else lp.fail("level must be 'strict' or 'det'");
            continue;
        }
        if (body.rfind("expect:", 0) == 0) {
            ScriptItem item;
            item.is_expect = true;
            item.expect = parse_word_at(lp, trim(body.substr(7)));
            script.items.push_back(std::move(item));
            continue;
        }
        ScriptItem item;
        item.step = parse_step_line(lp, lp.token());
        script.items.push_back(std::move(item));
    }
    if (!have_start)
        throw ParseError("script: missing 'start:' line", lineno, 1);
    if (!have_target)
        throw ParseError("script: missing 'target:' line", lineno, 1);
    return script;
}

std::string script_render(const ProofScript& script) {
    std::ostringstream out;
    out << "start: " << render_word(script.start) << '\n';
    out << "target: " << render_word(script.target) << '\n';
    out << "level: " << (script.level == CheckLevel::Strict ? "strict" : "det") << '\n';
    for (const auto& item : script.items) {
        if (item.is_expect) {
            out << "expect: " << render_word(item.expect) << '\n';
            continue;
        }
        const auto& s = item.step;
        out << step_kind_name(s.kind);
        switch (s.kind) {
            case StepKind::Merge:
            case StepKind::SwapDisjoint:
            case StepKind::PushInner:
            case StepKind::PushInnerInv:
            case StepKind::PushOuter:
            case StepKind::PushOuterInv:
            case StepKind::DeleteZero:
                out << " @" << s.pos;
                break;
            case StepKind::Split:
                out << " @" << s.pos << ' ' << s.split_left.render() << '|'
                    << s.split_right.render();
                break;
            case StepKind::InsertZero:
                out << " @" << s.pos << " x" << s.ins_i << s.ins_j;
                break;
            case StepKind::CentralCyclicRotate:
                out << " k=" << s.rotate_offset;
                break;
            case StepKind::PermuteIndices:
                out << " (" << s.perm[0] << ' ' << s.perm[1] << ' ' << s.perm[2] << ')';
                break;
            case StepKind::SubstituteUnits:
                out << " u->" << s.subst_u.render() << " v->" << s.subst_v.render();
                break;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace commdet
