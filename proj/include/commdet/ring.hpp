#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace commdet {

using BigInt = boost::multiprecision::cpp_int;

/// An element of the ring generated by two commuting units u, v subject to
/// (u-1)(v-1) = 0 = (v-1)(u-1), kept in the canonical normal form
///
///     c + sum_k a_k u^k + sum_k b_k v^k        (k != 0, coefficients != 0).
///
/// The defining relation collapses every mixed power: u^a v^b = u^a + v^b - 1,
/// so the normal form is closed under multiplication. Coefficients are exact
/// integers; equality of elements is equality of the stored data.
class RingElement {
public:
    using TermMap = std::map<int, BigInt>; // exponent -> coefficient, ordered

    RingElement() = default; // zero

    static RingElement constant(BigInt c);
    static RingElement one() { return constant(1); }
    static RingElement u_pow(int k, BigInt coeff = 1);
    static RingElement v_pow(int k, BigInt coeff = 1);

    const BigInt& const_coeff() const { return const_; }
    const TermMap& u_terms() const { return u_; }
    const TermMap& v_terms() const { return v_; }

    bool is_zero() const { return const_ == 0 && u_.empty() && v_.empty(); }
    bool is_one() const { return const_ == 1 && u_.empty() && v_.empty(); }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);

    bool operator==(const RingElement& rhs) const = default;

    /// Integer power of a unit; negative exponents use unit_inverse().
    /// Throws Error(NonUnit) when the base is not invertible.
    RingElement unit_power(int k) const;

    /// Inverse when the element is a unit of the ring. The units are exactly
    /// +-u^a v^b, i.e. +-1, +-u^a, +-v^b and +-(u^a + v^b - 1); everything
    /// else returns nullopt.
    std::optional<RingElement> unit_inverse() const;

    /// Ring endomorphism u -> u_img, v -> v_img (images must be units so
    /// negative powers make sense).
    RingElement substituted(const RingElement& u_img, const RingElement& v_img) const;

    /// Canonical text form: constant first, then u-powers by increasing
    /// exponent, then v-powers. No whitespace, so rendered elements embed in
    /// proof-script generator tokens. Zero renders as "0".
    std::string render() const;

    /// Parses the normal-form grammar: signed integer terms, `u^k` / `v^k`
    /// with nonzero integer k (`^1` omissible), joined by + or -.
    /// Throws ParseError with a 1-based column on malformed input.
    static RingElement parse(std::string_view text);

private:
    void normalize();

    BigInt const_ = 0;
    TermMap u_;
    TermMap v_;
};

inline RingElement ring_u() { return RingElement::u_pow(1); }
inline RingElement ring_v() { return RingElement::v_pow(1); }

} // namespace commdet
