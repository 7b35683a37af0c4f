#pragma once

#include "commdet/ring.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace commdet {

/// One Steinberg generator x_ij(s), 1 <= i != j <= 3, with argument in the
/// two-unit ring. The matrix image is the elementary matrix with s in the
/// (i,j) slot.
struct StGenerator {
    int i = 1;
    int j = 2;
    RingElement arg;

    bool operator==(const StGenerator&) const = default;
};

/// A word in Steinberg generators; empty means the group identity.
using StWord = std::vector<StGenerator>;

StGenerator st_gen(int i, int j, RingElement arg);

/// Inverse word: reversed order with negated arguments (x_ij(T)^-1 = x_ij(-T)).
StWord st_inverse(const StWord& w);

bool word_is_zero_free(const StWord& w);

std::string render_generator(const StGenerator& g);
std::string render_word(const StWord& w);

/// Parses a whitespace-separated sequence of `xij(<ring-element>)` tokens.
StWord parse_word(std::string_view text);

/// 3x3 matrix with entries in the ring; the codomain of the word -> matrix
/// homomorphism.
class RingMatrix3 {
public:
    RingMatrix3(); // zero
    static RingMatrix3 identity();
    static RingMatrix3 elementary(int i, int j, const RingElement& arg);

    RingElement& at(int i, int j) { return m_[(i - 1) * 3 + (j - 1)]; }
    const RingElement& at(int i, int j) const { return m_[(i - 1) * 3 + (j - 1)]; }

    bool is_identity() const;
    bool operator==(const RingMatrix3&) const = default;

    friend RingMatrix3 operator*(const RingMatrix3& a, const RingMatrix3& b);

    std::string render() const;
    /// Stable 64-bit fingerprint of the rendered entries (FNV-1a).
    std::uint64_t fingerprint() const;

private:
    std::array<RingElement, 9> m_;
};

/// Product of the elementary images of the generators; empty word -> identity.
RingMatrix3 st_matrix_image(const StWord& w);

/// Whitehead factorization of diag(w, w^-1) in slots (i, j):
/// x_ji(w^-1) x_ij(1-w) x_ji(-1) x_ij(1-w^-1). Requires w to be a unit.
StWord whitehead_d(int i, int j, const RingElement& w);

/// The 16-generator lift of the (u, v) symbol:
/// D12(u) D13(v) D12(u)^-1 D13(v)^-1.
StWord steinberg_symbol_word();

} // namespace commdet
