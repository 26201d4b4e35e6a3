#pragma once

// The recursive decomposition of W^tot(OG+(n, E)) as a sequence of
// hypothesis-checked rewrite rules, and its comparison with the diagram side.

#include "witt/error.hpp"
#include "witt/module.hpp"
#include "witt/twist.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

enum class Rule {
    BaseCase,      // OG+(1, E) = S
    OddSplit,      // n odd: shift 2n-3 along OG^{E_2}, composite embedding class trivial
    EvenSplit,     // n even: shift n-1 along OG^{E_1}, twisted by det(tilde E_n)
    TwistVanish,   // components twisted by O(1) vanish
    PbfEvenIso,    // projective bundle of even relative dimension r
    PbfOddVanish,  // projective bundle of odd relative dimension r
};

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> rule_from_name(std::string_view name) noexcept;

/// What a rule contributes once its hypothesis holds.
struct RuleOutcome {
    int shift = 0;
    TwistClass twist;
};

/// `parameter` is n for the Grassmannian rules and r for the projective
/// bundle rules; `twist` is only inspected by TwistVanish.
/// Throws Error{ParityViolation | TwistCheckFailed}.
RuleOutcome check_rule(Rule rule, int parameter, TwistClass twist = {});

struct TraceStep {
    Rule rule;
    int parameter;
    int shift;
    TwistClass twist;
    std::string cite;
};

using DerivationTrace = std::vector<TraceStep>;

struct Decomposition {
    GradedWittModule module;
    DerivationTrace trace;
};

/// Raised by decompose() when det(tilde E_n) is not assumed trivial and an
/// even step leaves that twist behind. Carries the undischarged result.
class UnresolvedTwistError : public Error {
public:
    UnresolvedTwistError(const std::string& message, Decomposition partial)
        : Error(ErrorCode::NontrivialTwistUnresolved, message)
        , partial_(std::move(partial))
    {
    }

    const Decomposition& partial() const noexcept { return partial_; }

private:
    Decomposition partial_;
};

Decomposition decompose(int n, bool trivial_det = true);

struct CrossCheckReport {
    int n = 0;
    bool match = false;
    std::size_t witt_rank = 0;
    std::uint64_t cell_count = 0;  // rank of K-theory / Chow groups, 2^{n-1}
    /// (degree, twist) entries present on one side only.
    std::vector<std::pair<int, TwistClass>> only_in_derivation;
    std::vector<std::pair<int, TwistClass>> only_in_diagrams;

    std::string describe() const;
};

/// Compares decompose(n, true) with the module built from the diagrams.
CrossCheckReport cross_check(int n);

}  // namespace witt
