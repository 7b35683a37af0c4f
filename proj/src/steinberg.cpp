#include "commdet/steinberg.hpp"

#include "commdet/error.hpp"

#include <cctype>
#include <sstream>

namespace commdet {

StGenerator st_gen(int i, int j, RingElement arg) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw Error(ErrorKind::BadArgument,
                    "generator indices must be distinct and in {1,2,3}");
    return StGenerator{i, j, std::move(arg)};
}

StWord st_inverse(const StWord& w) {
    StWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(StGenerator{it->i, it->j, -it->arg});
    return r;
}

bool word_is_zero_free(const StWord& w) {
    for (const auto& g : w)
        if (g.arg.is_zero()) return false;
    return true;
}

std::string render_generator(const StGenerator& g) {
    std::ostringstream out;
    out << 'x' << g.i << g.j << '(' << g.arg.render() << ')';
    return out.str();
}

std::string render_word(const StWord& w) {
    std::ostringstream out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out << ' ';
        out << render_generator(w[k]);
    }
    return out.str();
}

StWord parse_word(std::string_view text) {
    StWord w;
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("word: " + what, 0, static_cast<int>(pos) + 1);
    };
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != 'x') fail("expected generator 'xij(...)'");
        if (pos + 2 >= text.size()) fail("truncated generator");
        char ci = text[pos + 1], cj = text[pos + 2];
        if (!std::isdigit(static_cast<unsigned char>(ci)) ||
            !std::isdigit(static_cast<unsigned char>(cj)))
            fail("expected two index digits after 'x'");
        int i = ci - '0', j = cj - '0';
        if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
            fail("indices must be distinct and in 1..3");
        pos += 3;
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        size_t open = pos++;
        int depth = 1;
        while (pos < text.size() && depth > 0) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) {
            pos = open;
            fail("unbalanced parentheses");
        }
        std::string_view inner = text.substr(open + 1, pos - open - 2);
        RingElement arg;
        try {
            arg = RingElement::parse(inner);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 0, static_cast<int>(open + 1) + e.column());
        }
        w.push_back(StGenerator{i, j, std::move(arg)});
    }
    return w;
}

RingMatrix3::RingMatrix3() = default;

RingMatrix3 RingMatrix3::identity() {
    RingMatrix3 m;
    for (int i = 1; i <= 3; ++i) m.at(i, i) = RingElement::one();
    return m;
}

RingMatrix3 RingMatrix3::elementary(int i, int j, const RingElement& arg) {
    RingMatrix3 m = identity();
    m.at(i, j) = arg;
    return m;
}

bool RingMatrix3::is_identity() const { return *this == identity(); }

RingMatrix3 operator*(const RingMatrix3& a, const RingMatrix3& b) {
    RingMatrix3 r;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            RingElement acc;
            for (int k = 1; k <= 3; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

std::string RingMatrix3::render() const {
    std::ostringstream out;
    for (int i = 1; i <= 3; ++i) {
        out << '[';
        for (int j = 1; j <= 3; ++j) {
            if (j > 1) out << ", ";
            out << at(i, j).render();
        }
        out << ']';
        if (i < 3) out << ' ';
    }
    return out.str();
}

std::uint64_t RingMatrix3::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : render()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

RingMatrix3 st_matrix_image(const StWord& w) {
    RingMatrix3 m = RingMatrix3::identity();
    for (const auto& g : w) m = m * RingMatrix3::elementary(g.i, g.j, g.arg);
    return m;
}

StWord whitehead_d(int i, int j, const RingElement& w) {
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3)
        throw Error(ErrorKind::BadArgument, "whitehead_d requires distinct indices in 1..3");
    auto inv = w.unit_inverse();
    if (!inv)
        throw Error(ErrorKind::NonUnit, "whitehead_d argument is not a unit: " + w.render());
    const RingElement one = RingElement::one();
    return StWord{
        st_gen(j, i, *inv),
        st_gen(i, j, one - w),
        st_gen(j, i, -one),
        st_gen(i, j, one - *inv),
    };
}

StWord steinberg_symbol_word() {
    const StWord d12 = whitehead_d(1, 2, ring_u());
    const StWord d13 = whitehead_d(1, 3, ring_v());
    StWord w = d12;
    auto append = [&w](const StWord& part) { w.insert(w.end(), part.begin(), part.end()); };
    append(d13);
    append(st_inverse(d12));
    append(st_inverse(d13));
    return w;
}

} // namespace commdet
