#pragma once

// Line bundles modulo squares, as an F2-vector space over a fixed registry
// of symbols, plus integer degrees with their Z/4 residue.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

enum class LineBundleSymbol : std::uint8_t {
    O1,          // Pfaffian O(1)
    DetEnTilde,  // det of the tilde-E_n flag piece
    DetEn,       // det E_n
    E1,          // the line E_1 of the flag
    DetE,        // det E of a projective bundle P(E)
    BaseL,       // a formal line bundle pulled back from the base
};

inline constexpr std::size_t kSymbolCount = 6;
inline constexpr std::array<LineBundleSymbol, kSymbolCount> kAllSymbols{
    LineBundleSymbol::O1,   LineBundleSymbol::DetEnTilde, LineBundleSymbol::DetEn,
    LineBundleSymbol::E1,   LineBundleSymbol::DetE,       LineBundleSymbol::BaseL,
};

std::string_view name(LineBundleSymbol s) noexcept;
std::optional<LineBundleSymbol> symbol_from_name(std::string_view name) noexcept;

/// An element of Pic/2: the set of symbols with coefficient 1.
class TwistClass {
public:
    constexpr TwistClass() = default;
    TwistClass(std::initializer_list<LineBundleSymbol> symbols);

    static constexpr TwistClass from_bits(std::uint8_t bits) { return TwistClass(bits); }
    constexpr std::uint8_t bits() const noexcept { return bits_; }

    bool contains(LineBundleSymbol s) const noexcept;
    bool is_trivial() const noexcept { return bits_ == 0; }

    /// Symbol names sorted alphabetically.
    std::vector<std::string> names() const;
    std::string to_string() const;

    friend constexpr TwistClass operator+(TwistClass a, TwistClass b) noexcept
    {
        return TwistClass(static_cast<std::uint8_t>(a.bits_ ^ b.bits_));
    }
    TwistClass& operator+=(TwistClass o) noexcept
    {
        bits_ ^= o.bits_;
        return *this;
    }

    friend constexpr auto operator<=>(TwistClass, TwistClass) = default;

private:
    constexpr explicit TwistClass(std::uint8_t bits) : bits_(bits) {}

    std::uint8_t bits_ = 0;
};

/// Exact integer degree; the Witt index lives in its residue mod 4.
struct DegreeClass {
    int degree = 0;

    constexpr int residue() const noexcept { return ((degree % 4) + 4) % 4; }

    friend constexpr DegreeClass operator+(DegreeClass a, DegreeClass b) noexcept
    {
        return {a.degree + b.degree};
    }
    friend constexpr auto operator<=>(DegreeClass, DegreeClass) = default;
};

TwistClass twist_add(TwistClass a, TwistClass b) noexcept;

/// O(k) modulo squares.
TwistClass o_twist(int k) noexcept;

/// det L_n^+ = det(tilde E_n) (x) O(-2).
TwistClass det_Ln_twist(int n);

/// Canonical class of the embedding OG^{E_1} -> OG (depth 0) or
/// OG^{E_2} -> OG^{E_1} (depth 1):
///   depth 0: O(-2) (x) det(tilde E_n) (x) E_1^{n-2}
///   depth 1: O(-2) (x) det(tilde E_n) (x) E_1^{n-4}
TwistClass omega_iota_twist(int n, int depth);

/// Class of the composite embedding OG^{E_2} -> OG for odd n.
/// Throws Error{ParityViolation} for even n.
TwistClass omega_theta_twist(int n);

/// Relative canonical bundle of P(E) -> X with rank E = r + 1:
/// det(E)^-1 (x) O(-r-1). At r = 0 the bundle is X itself and the formula
/// is evaluated as written.
TwistClass relative_canonical_twist(int r);

}  // namespace witt
