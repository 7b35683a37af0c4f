#include "commdet/ring.hpp"

#include "commdet/error.hpp"

#include <cctype>
#include <sstream>

namespace commdet {

RingElement RingElement::constant(BigInt c) {
    RingElement e;
    e.const_ = std::move(c);
    return e;
}

RingElement RingElement::u_pow(int k, BigInt coeff) {
    RingElement e;
    if (k == 0) {
        e.const_ = std::move(coeff);
    } else if (coeff != 0) {
        e.u_[k] = std::move(coeff);
    }
    return e;
}

RingElement RingElement::v_pow(int k, BigInt coeff) {
    RingElement e;
    if (k == 0) {
        e.const_ = std::move(coeff);
    } else if (coeff != 0) {
        e.v_[k] = std::move(coeff);
    }
    return e;
}

void RingElement::normalize() {
    for (auto it = u_.begin(); it != u_.end();) {
        if (it->second == 0) it = u_.erase(it); else ++it;
    }
    for (auto it = v_.begin(); it != v_.end();) {
        if (it->second == 0) it = v_.erase(it); else ++it;
    }
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    r.const_ = -r.const_;
    for (auto& [k, c] : r.u_) c = -c;
    for (auto& [k, c] : r.v_) c = -c;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
    const_ += rhs.const_;
    for (const auto& [k, c] : rhs.u_) u_[k] += c;
    for (const auto& [k, c] : rhs.v_) v_[k] += c;
    normalize();
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
    const_ -= rhs.const_;
    for (const auto& [k, c] : rhs.u_) u_[k] -= c;
    for (const auto& [k, c] : rhs.v_) v_[k] -= c;
    normalize();
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement r;
    r.const_ = a.const_ * b.const_;
    for (const auto& [k, c] : a.u_) r.u_[k] += c * b.const_;
    for (const auto& [k, c] : a.v_) r.v_[k] += c * b.const_;
    for (const auto& [k, c] : b.u_) r.u_[k] += a.const_ * c;
    for (const auto& [k, c] : b.v_) r.v_[k] += a.const_ * c;

    // u^k u^m = u^{k+m}; exponent 0 folds into the constant.
    for (const auto& [k, ca] : a.u_) {
        for (const auto& [m, cb] : b.u_) {
            BigInt t = ca * cb;
            if (k + m == 0) r.const_ += t; else r.u_[k + m] += t;
        }
    }
    for (const auto& [k, ca] : a.v_) {
        for (const auto& [m, cb] : b.v_) {
            BigInt t = ca * cb;
            if (k + m == 0) r.const_ += t; else r.v_[k + m] += t;
        }
    }

    // Mixed rule u^k v^m = u^k + v^m - 1: both factorizations of the mixed
    // power pass through (u-1)(v-1) = 0, so this is forced by the relation.
    auto mixed = [&r](int k, const BigInt& ca, int m, const BigInt& cb) {
        BigInt t = ca * cb;
        r.u_[k] += t;
        r.v_[m] += t;
        r.const_ -= t;
    };
    for (const auto& [k, ca] : a.u_)
        for (const auto& [m, cb] : b.v_) mixed(k, ca, m, cb);
    for (const auto& [m, cb] : a.v_)
        for (const auto& [k, ca] : b.u_) mixed(k, ca, m, cb);

    r.normalize();
    return r;
}

RingElement RingElement::unit_power(int k) const {
    if (k == 0) return one();
    RingElement base = *this;
    if (k < 0) {
        auto inv = unit_inverse();
        if (!inv)
            throw Error(ErrorKind::NonUnit,
                        "negative power of non-unit element " + render());
        base = *inv;
        k = -k;
    }
    RingElement acc = one();
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

std::optional<RingElement> RingElement::unit_inverse() const {
    // Units are exactly the monomials +-u^a v^b of the underlying group ring
    // structure; in normal form those are +-1, +-u^a, +-v^b and
    // +-(u^a + v^b - 1).
    const bool cu = u_.size() == 1;
    const bool cv = v_.size() == 1;
    if (u_.empty() && v_.empty()) {
        if (const_ == 1 || const_ == -1) return constant(const_);
        return std::nullopt;
    }
    if (cu && v_.empty() && const_ == 0) {
        const auto& [k, c] = *u_.begin();
        if (c == 1 || c == -1) return u_pow(-k, c);
        return std::nullopt;
    }
    if (cv && u_.empty() && const_ == 0) {
        const auto& [k, c] = *v_.begin();
        if (c == 1 || c == -1) return v_pow(-k, c);
        return std::nullopt;
    }
    if (cu && cv) {
        const auto& [k, a] = *u_.begin();
        const auto& [m, b] = *v_.begin();
        if (a == b && (a == 1 || a == -1) && const_ == -a) {
            // eps*(u^k + v^m - 1) has inverse eps*(u^-k + v^-m - 1).
            RingElement inv = u_pow(-k, a);
            inv += v_pow(-m, a);
            inv -= constant(a);
            return inv;
        }
    }
    return std::nullopt;
}

RingElement RingElement::substituted(const RingElement& u_img, const RingElement& v_img) const {
    RingElement r = constant(const_);
    for (const auto& [k, c] : u_) r += constant(c) * u_img.unit_power(k);
    for (const auto& [k, c] : v_) r += constant(c) * v_img.unit_power(k);
    return r;
}

namespace {

void render_term(std::ostringstream& out, bool first, const BigInt& coeff,
                 char sym, int exp) {
    BigInt a = coeff;
    if (first) {
        if (a < 0) { out << '-'; a = -a; }
    } else {
        out << (a < 0 ? '-' : '+');
        if (a < 0) a = -a;
    }
    if (sym == 0) {
        out << a.str();
        return;
    }
    if (a != 1) out << a.str();
    out << sym;
    if (exp != 1) out << '^' << exp;
}

} // namespace

std::string RingElement::render() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (const_ != 0) {
        render_term(out, first, const_, 0, 0);
        first = false;
    }
    for (const auto& [k, c] : u_) {
        render_term(out, first, c, 'u', k);
        first = false;
    }
    for (const auto& [k, c] : v_) {
        render_term(out, first, c, 'v', k);
        first = false;
    }
    return out.str();
}

namespace {

struct RingParser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("ring element: " + what, 0, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    BigInt parse_digits() {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    int parse_exponent() {
        ++pos; // consume '^'
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; skip_ws(); }
        size_t at = pos;
        BigInt digits = parse_digits();
        if (digits == 0) {
            pos = at;
            fail("exponent 0 is not allowed");
        }
        if (digits > 1000000) {
            pos = at;
            fail("exponent out of range");
        }
        int k = static_cast<int>(digits);
        return neg ? -k : k;
    }

    // term := integer | [integer] var ['^' exponent]
    RingElement parse_term(bool negated) {
        skip_ws();
        BigInt coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_digits();
            have_coeff = true;
            skip_ws();
        }
        char c = peek();
        if (c == 'u' || c == 'v') {
            ++pos;
            int exp = 1;
            skip_ws();
            if (peek() == '^') exp = parse_exponent();
            skip_ws();
            if (peek() == '*' || peek() == 'u' || peek() == 'v')
                fail("mixed monomials are not in normal form");
            if (negated) coeff = -coeff;
            return c == 'u' ? RingElement::u_pow(exp, coeff) : RingElement::v_pow(exp, coeff);
        }
        if (!have_coeff) fail("expected a term");
        if (negated) coeff = -coeff;
        return RingElement::constant(coeff);
    }

    RingElement parse_all() {
        skip_ws();
        if (pos >= text.size()) fail("empty input");
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        RingElement acc = parse_term(neg);
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                acc += parse_term(c == '-');
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return acc;
    }
};

} // namespace

RingElement RingElement::parse(std::string_view text) {
    RingParser p{text};
    return p.parse_all();
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::IllegalStep: return "IllegalStep";
        case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorKind::NonUnit: return "NonUnit";
        case ErrorKind::NonHermitian: return "NonHermitian";
        case ErrorKind::FermiOnEigenvalue: return "FermiOnEigenvalue";
        case ErrorKind::NotDeterminantClass: return "NotDeterminantClass";
        case ErrorKind::PadInsufficient: return "PadInsufficient";
        case ErrorKind::GapTooSmall: return "GapTooSmall";
        case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::KitaevViolation: return "KitaevViolation";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

} // namespace commdet
