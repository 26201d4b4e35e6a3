#include "witt/verify.hpp"

#include "witt/derivation.hpp"
#include "witt/enumeration.hpp"
#include "witt/error.hpp"
#include "witt/module.hpp"
#include "witt/twist.hpp"

#include <algorithm>
#include <functional>

namespace witt {

namespace {

// Each check returns an empty string on success, else a description.
using Check = std::function<std::string()>;

std::string n_label(int n)
{
    return "n=" + std::to_string(n) + ": ";
}

std::string check_ground_truth()
{
    const std::set<StrictPartition> expected{
        StrictPartition{},           StrictPartition({2, 1}),       StrictPartition({4, 3}),
        StrictPartition({4, 3, 2, 1}), StrictPartition({6, 5}),       StrictPartition({6, 5, 2, 1}),
        StrictPartition({6, 5, 4, 3}), StrictPartition({6, 5, 4, 3, 2, 1}),
    };
    if (recursive_enumerate(7).members != expected)
        return "recursive enumeration at n=7 differs from the eight known diagrams";
    if (oracle_enumerate(7).members != expected)
        return "oracle enumeration at n=7 differs from the eight known diagrams";
    return {};
}

std::string check_oracle(int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        if (recursive_enumerate(n).members != oracle_enumerate(n).members)
            return n_label(n) + "recursive and oracle enumerations differ";
    return {};
}

std::string check_members_even(int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto s = recursive_enumerate(n);
        for (const auto& lambda : s.members)
            if (!is_even(make_diagram(s.frame(), lambda)))
                return n_label(n) + lambda.to_string() + " is not even";
    }
    return {};
}

std::string check_counting(int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto size = recursive_enumerate(n).size();
        if (size != (std::uint64_t{1} << (n / 2)))
            return n_label(n) + "found " + std::to_string(size) + " diagrams";
    }
    return {};
}

std::string check_generating_functions(int max_n)
{
    std::vector<PoincarePolynomial> p(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        p[static_cast<std::size_t>(n)] = poincare_polynomial(n);
        const auto& pn = p[static_cast<std::size_t>(n)];
        if (n >= 3 && n % 2 == 1 && pn != p[static_cast<std::size_t>(n - 2)].times_one_plus_q_pow(2 * n - 3))
            return n_label(n) + "P_n != (1 + q^(2n-3)) P_(n-2)";
        if (n % 2 == 0 && pn != p[static_cast<std::size_t>(n - 1)].times_one_plus_q_pow(n - 1))
            return n_label(n) + "P_n != (1 + q^(n-1)) P_(n-1)";
        if (pn.reversed(n * (n - 1) / 2) != pn)
            return n_label(n) + "P_n is not palindromic";
    }
    return {};
}

std::string check_twists(int max_n)
{
    for (int n = 3; n <= max_n; n += 2)
        if (!omega_theta_twist(n).is_trivial())
            return n_label(n) + "composite embedding class is " + omega_theta_twist(n).to_string();
    for (int n = 4; n <= max_n; ++n)
        if (omega_iota_twist(n, 0) != omega_iota_twist(n, 1))
            return n_label(n) + "embedding classes at depth 0 and 1 differ";
    return {};
}

std::string check_twisted_vanishing(int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto m = decompose(n, true).module;
        for (std::uint8_t bits = 0; bits < (1u << kSymbolCount); ++bits) {
            const auto t = TwistClass::from_bits(bits);
            if (t.contains(LineBundleSymbol::O1) && !twisted_component(m, t).is_zero())
                return n_label(n) + "component twisted by " + t.to_string() + " is nonzero";
        }
    }
    return {};
}

std::string check_cross(int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto report = cross_check(n);
        if (!report.match)
            return report.describe();
    }
    const auto m7 = decompose(7, true).module;
    const RankTable expected{{{0, TwistClass{}}, 1}, {{1, TwistClass{}}, 1}, {{2, TwistClass{}}, 3},
                             {{3, TwistClass{}}, 3}};
    if (rank_table(m7) != expected)
        return "n=7 rank table is not (1,1,3,3) at trivial twist";
    return {};
}

std::string check_rule_gating()
{
    auto violates = [](Rule rule, int parameter) {
        try {
            check_rule(rule, parameter);
        } catch (const Error& e) {
            return e.code() == ErrorCode::ParityViolation;
        }
        return false;
    };
    for (int n = 2; n <= 40; n += 2)
        if (!violates(Rule::OddSplit, n))
            return "OddSplit accepted even n=" + std::to_string(n);
    for (int r = 1; r <= 41; r += 2)
        if (!violates(Rule::PbfEvenIso, r))
            return "PbfEvenIso accepted odd r=" + std::to_string(r);
    for (int r = 0; r <= 40; r += 2)
        if (!violates(Rule::PbfOddVanish, r))
            return "PbfOddVanish accepted even r=" + std::to_string(r);
    for (int r = 0; r <= 41; ++r) {
        const TwistClass expected = r % 2 == 1 ? TwistClass{LineBundleSymbol::DetE}
                                               : TwistClass{LineBundleSymbol::DetE, LineBundleSymbol::O1};
        if (relative_canonical_twist(r) != expected)
            return "relative canonical class wrong at r=" + std::to_string(r);
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options)
{
    const int max_n = options.max_n;
    const int oracle_max_n = std::min(options.oracle_max_n, max_n);
    const std::vector<std::pair<std::string, Check>> checks{
        {"n=7 ground truth", check_ground_truth},
        {"oracle equivalence n<=" + std::to_string(oracle_max_n), [=] { return check_oracle(oracle_max_n); }},
        {"members are even n<=" + std::to_string(max_n), [=] { return check_members_even(max_n); }},
        {"counting law n<=" + std::to_string(max_n), [=] { return check_counting(max_n); }},
        {"generating function identities n<=" + std::to_string(max_n),
         [=] { return check_generating_functions(max_n); }},
        {"twist arithmetic n<=" + std::to_string(options.twist_max_n),
         [=] { return check_twists(options.twist_max_n); }},
        {"twisted vanishing n<=" + std::to_string(max_n), [=] { return check_twisted_vanishing(max_n); }},
        {"module cross-check n<=" + std::to_string(max_n), [=] { return check_cross(max_n); }},
        {"rule gating", check_rule_gating},
    };

    std::vector<CheckResult> results;
    for (const auto& [name, check] : checks) {
        CheckResult r{name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace witt
