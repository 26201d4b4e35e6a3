#include "witt/derivation.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace witt {

namespace {

constexpr std::string_view kBaseCite = "OG+(1,E) = S: one generator in degree 0";
constexpr std::string_view kOddCite =
    "n odd: W^tot(OG+(n)) = W^tot(OG+^{E2}(n))[-(2n-3)] + W^tot(OG+^{E2}(n)), OG+^{E2}(n) = OG+(n-2); "
    "localization + devissage along the composite embedding, split by excess intersection";
constexpr std::string_view kEvenCite =
    "n even: W^tot(OG+(n)) = W^tot(OG+^{E1}(n))[-(n-1), det(tilde E_n)] + W^tot(OG+^{E1}(n)), "
    "OG+^{E1}(n) = OG+(n-1); localization sequence splits";
constexpr std::string_view kTwistVanishCite = "W^i(OG+(n), L (x) O(1)) = 0";
constexpr std::string_view kPbfEvenCite = "r even: q_* per and e(Q) q^* are inverse isomorphisms";
constexpr std::string_view kPbfOddCite = "r odd: q_* q^* = 0, pushforward after pullback vanishes";

[[noreturn]] void hypothesis_failed(Rule rule, std::string_view what, int parameter)
{
    throw Error(ErrorCode::ParityViolation, std::string(to_string(rule)) + " requires " + std::string(what) +
                                                ", got " + std::to_string(parameter));
}

Decomposition decompose_checked(int n, bool trivial_det, const std::string& path)
{
    if (n == 1) {
        const auto out = check_rule(Rule::BaseCase, 1);
        Generator g{DegreeClass{out.shift}, out.twist, path + "base"};
        return {GradedWittModule({g}),
                {TraceStep{Rule::BaseCase, 1, out.shift, out.twist, std::string(kBaseCite)}}};
    }

    const bool odd = n % 2 == 1;
    const Rule rule = odd ? Rule::OddSplit : Rule::EvenSplit;
    RuleOutcome out = check_rule(rule, n);
    if (!odd && trivial_det)
        out.twist += TwistClass{LineBundleSymbol::DetEnTilde};

    const int sub_n = odd ? n - 2 : n - 1;
    const std::string tag = "@" + std::to_string(n) + ",";
    Decomposition shifted = decompose_checked(sub_n, trivial_det, path + "shift" + tag);
    Decomposition kept = decompose_checked(sub_n, trivial_det, path + "keep" + tag);

    Decomposition result;
    result.module = direct_sum(shift(shifted.module, out.shift, out.twist), kept.module);
    result.trace.push_back(TraceStep{rule, n, out.shift, out.twist, std::string(odd ? kOddCite : kEvenCite)});
    result.trace.insert(result.trace.end(), kept.trace.begin(), kept.trace.end());
    return result;
}

}  // namespace

std::string_view to_string(Rule rule) noexcept
{
    switch (rule) {
    case Rule::BaseCase: return "BaseCase";
    case Rule::OddSplit: return "OddSplit";
    case Rule::EvenSplit: return "EvenSplit";
    case Rule::TwistVanish: return "TwistVanish";
    case Rule::PbfEvenIso: return "PbfEvenIso";
    case Rule::PbfOddVanish: return "PbfOddVanish";
    }
    return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) noexcept
{
    for (Rule r : {Rule::BaseCase, Rule::OddSplit, Rule::EvenSplit, Rule::TwistVanish, Rule::PbfEvenIso,
                   Rule::PbfOddVanish})
        if (to_string(r) == name)
            return r;
    return std::nullopt;
}

RuleOutcome check_rule(Rule rule, int parameter, TwistClass twist)
{
    switch (rule) {
    case Rule::BaseCase:
        if (parameter != 1)
            hypothesis_failed(rule, "n = 1", parameter);
        return {0, {}};

    case Rule::OddSplit: {
        if (parameter < 3 || parameter % 2 == 0)
            hypothesis_failed(rule, "odd n >= 3", parameter);
        const TwistClass omega = omega_theta_twist(parameter);
        if (!omega.is_trivial())
            throw Error(ErrorCode::TwistCheckFailed,
                        "composite embedding class " + omega.to_string() + " is not trivial mod squares");
        return {2 * parameter - 3, omega};
    }

    case Rule::EvenSplit:
        if (parameter < 2 || parameter % 2 != 0)
            hypothesis_failed(rule, "even n >= 2", parameter);
        return {parameter - 1, TwistClass{LineBundleSymbol::DetEnTilde}};

    case Rule::TwistVanish:
        if (!twist.contains(LineBundleSymbol::O1))
            throw Error(ErrorCode::TwistCheckFailed,
                        "TwistVanish applies to twists containing O1, got " + twist.to_string());
        return {0, twist};

    case Rule::PbfEvenIso:
        if (parameter < 0 || parameter % 2 != 0)
            hypothesis_failed(rule, "even relative dimension r", parameter);
        return {parameter, relative_canonical_twist(parameter)};

    case Rule::PbfOddVanish:
        if (parameter < 0 || parameter % 2 == 0)
            hypothesis_failed(rule, "odd relative dimension r", parameter);
        return {parameter, relative_canonical_twist(parameter)};
    }
    throw Error(ErrorCode::ParityViolation, "unknown rule");
}

Decomposition decompose(int n, bool trivial_det)
{
    if (n < 1)
        throw Error(ErrorCode::BoundExceeded, "n must be at least 1");

    Decomposition result = decompose_checked(n, trivial_det, "");

    for (const auto& g : result.module.generators())
        if (g.twist.contains(LineBundleSymbol::O1))
            throw Error(ErrorCode::TwistCheckFailed, "generator " + provenance_string(g.provenance) +
                                                         " carries an O(1) twist");

    if (!trivial_det) {
        const bool leftover = std::any_of(result.module.generators().begin(), result.module.generators().end(),
                                          [](const Generator& g) { return !g.twist.is_trivial(); });
        if (leftover)
            throw UnresolvedTwistError("det(tilde E_" + std::to_string(n) +
                                           ") twist is left by EvenSplit and no later rule discharges it",
                                       std::move(result));
    }
    return result;
}

std::string CrossCheckReport::describe() const
{
    std::ostringstream os;
    os << "n=" << n << (match ? " match" : " MISMATCH") << " witt_rank=" << witt_rank
       << " cell_count=" << cell_count;
    for (const auto& [d, t] : only_in_derivation)
        os << "\n  only in derivation: degree " << d << " twist " << t.to_string();
    for (const auto& [d, t] : only_in_diagrams)
        os << "\n  only in diagrams: degree " << d << " twist " << t.to_string();
    return os.str();
}

CrossCheckReport cross_check(int n)
{
    if (n < 1 || n > kOracleMaxN)
        throw Error(ErrorCode::BoundExceeded, "cross_check is limited to 1 <= n <= " + std::to_string(kOracleMaxN));

    const auto derived = decompose(n, true).module.signature();
    const auto diagrams = from_diagrams(recursive_enumerate(n)).signature();

    CrossCheckReport report;
    report.n = n;
    report.witt_rank = derived.size();
    report.cell_count = std::uint64_t{1} << (n - 1);
    std::set_difference(derived.begin(), derived.end(), diagrams.begin(), diagrams.end(),
                        std::back_inserter(report.only_in_derivation));
    std::set_difference(diagrams.begin(), diagrams.end(), derived.begin(), derived.end(),
                        std::back_inserter(report.only_in_diagrams));
    report.match = report.only_in_derivation.empty() && report.only_in_diagrams.empty();
    return report;
}

}  // namespace witt
