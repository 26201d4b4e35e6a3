#include "witt/twist.hpp"

#include "witt/error.hpp"

#include <algorithm>

namespace witt {

namespace {

constexpr std::uint8_t bit(LineBundleSymbol s) noexcept
{
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
}

TwistClass e1_power(int exponent)
{
    return (exponent % 2 != 0) ? TwistClass{LineBundleSymbol::E1} : TwistClass{};
}

}  // namespace

std::string_view name(LineBundleSymbol s) noexcept
{
    switch (s) {
    case LineBundleSymbol::O1: return "O1";
    case LineBundleSymbol::DetEnTilde: return "DetEnTilde";
    case LineBundleSymbol::DetEn: return "DetEn";
    case LineBundleSymbol::E1: return "E1";
    case LineBundleSymbol::DetE: return "DetE";
    case LineBundleSymbol::BaseL: return "BaseL";
    }
    return "?";
}

std::optional<LineBundleSymbol> symbol_from_name(std::string_view n) noexcept
{
    for (auto s : kAllSymbols)
        if (name(s) == n)
            return s;
    return std::nullopt;
}

TwistClass::TwistClass(std::initializer_list<LineBundleSymbol> symbols)
{
    for (auto s : symbols)
        bits_ ^= bit(s);
}

bool TwistClass::contains(LineBundleSymbol s) const noexcept
{
    return (bits_ & bit(s)) != 0;
}

std::vector<std::string> TwistClass::names() const
{
    std::vector<std::string> out;
    for (auto s : kAllSymbols)
        if (contains(s))
            out.emplace_back(name(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::string TwistClass::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& n : names()) {
        out += first ? "" : ",";
        out += n;
        first = false;
    }
    return out + "}";
}

TwistClass twist_add(TwistClass a, TwistClass b) noexcept
{
    return a + b;
}

TwistClass o_twist(int k) noexcept
{
    return (k % 2 != 0) ? TwistClass{LineBundleSymbol::O1} : TwistClass{};
}

TwistClass det_Ln_twist(int n)
{
    if (n < 2)
        throw Error(ErrorCode::ParityViolation, "det L_n^+ needs n >= 2");
    return TwistClass{LineBundleSymbol::DetEnTilde} + o_twist(-2);
}

TwistClass omega_iota_twist(int n, int depth)
{
    if (depth != 0 && depth != 1)
        throw Error(ErrorCode::ParityViolation, "embedding depth must be 0 or 1");
    if (n < 2)
        throw Error(ErrorCode::ParityViolation, "canonical class of the embedding needs n >= 2");
    const int e1_exponent = depth == 0 ? n - 2 : n - 4;
    return o_twist(-2) + TwistClass{LineBundleSymbol::DetEnTilde} + e1_power(e1_exponent);
}

TwistClass omega_theta_twist(int n)
{
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorCode::ParityViolation,
                    "the composite embedding is used for odd n >= 3, got n=" + std::to_string(n));
    return omega_iota_twist(n, 1) + omega_iota_twist(n, 0);
}

TwistClass relative_canonical_twist(int r)
{
    if (r < 0)
        throw Error(ErrorCode::ParityViolation, "relative dimension must be non-negative");
    // det E^dual and det E agree modulo squares.
    return TwistClass{LineBundleSymbol::DetE} + o_twist(-r - 1);
}

}  // namespace witt
