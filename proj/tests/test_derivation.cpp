#include "witt/derivation.hpp"

#include <doctest.h>

#include <algorithm>

using namespace witt;
using S = LineBundleSymbol;

namespace {

std::vector<int> degrees(const GradedWittModule& m)
{
    std::vector<int> out;
    for (const auto& g : m.generators())
        out.push_back(g.degree.degree);
    std::sort(out.begin(), out.end());
    return out;
}

ErrorCode error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Mismatch;
}

}  // namespace

TEST_CASE("decompose base case")
{
    const auto d = decompose(1);
    CHECK(degrees(d.module) == std::vector<int>{0});
    REQUIRE(d.trace.size() == 1);
    CHECK(d.trace[0].rule == Rule::BaseCase);
}

TEST_CASE("decompose n = 7")
{
    const auto d = decompose(7, true);
    CHECK(degrees(d.module) == std::vector<int>{0, 3, 7, 10, 11, 14, 18, 21});
    REQUIRE(d.trace.size() == 4);
    CHECK(d.trace[0].rule == Rule::OddSplit);
    CHECK(d.trace[0].parameter == 7);
    CHECK(d.trace[0].shift == 11);
    CHECK(d.trace[1].parameter == 5);
    CHECK(d.trace[1].shift == 7);
    CHECK(d.trace[2].parameter == 3);
    CHECK(d.trace[2].shift == 3);
    CHECK(d.trace[3].rule == Rule::BaseCase);
    for (const auto& step : d.trace)
        CHECK(step.twist.is_trivial());
}

TEST_CASE("decompose n = 2")
{
    const auto d = decompose(2, true);
    CHECK(degrees(d.module) == std::vector<int>{0, 1});
    REQUIRE(d.trace.size() == 2);
    CHECK(d.trace[0].rule == Rule::EvenSplit);
    CHECK(d.trace[0].shift == 1);
    CHECK(d.trace[0].twist.is_trivial());
    CHECK(d.trace[1].rule == Rule::BaseCase);
}

TEST_CASE("general flags: det(tilde E_n) twist is reported, not dropped")
{
    try {
        decompose(4, false);
        FAIL("expected NontrivialTwistUnresolved");
    } catch (const UnresolvedTwistError& e) {
        CHECK(e.code() == ErrorCode::NontrivialTwistUnresolved);
        const auto& partial = e.partial();
        CHECK(partial.trace[0].twist == TwistClass{S::DetEnTilde});
        CHECK(twisted_component(partial.module, {S::DetEnTilde}).rank() == 2);
        CHECK(twisted_component(partial.module, {}).rank() == 2);
    }
    // odd n never passes through an even step
    CHECK(decompose(9, false).module.signature() == decompose(9, true).module.signature());
}

TEST_CASE("trace invariants, n <= 20")
{
    for (int n = 1; n <= 20; ++n) {
        const auto d = decompose(n, true);
        CHECK(d.module.rank() == count(n));
        REQUIRE(!d.trace.empty());
        CHECK(d.trace.back().rule == Rule::BaseCase);
        CHECK(d.trace.back().parameter == 1);
        for (std::size_t i = 0; i + 1 < d.trace.size(); ++i) {
            const auto& step = d.trace[i];
            CHECK(step.parameter > d.trace[i + 1].parameter);
            if (step.rule == Rule::OddSplit) {
                CHECK(step.parameter % 2 == 1);
                CHECK(step.shift == 2 * step.parameter - 3);
            } else {
                REQUIRE(step.rule == Rule::EvenSplit);
                CHECK(step.parameter % 2 == 0);
                CHECK(step.shift == step.parameter - 1);
            }
        }
        // deterministic
        const auto again = decompose(n, true);
        REQUIRE(again.trace.size() == d.trace.size());
        for (std::size_t i = 0; i < d.trace.size(); ++i) {
            CHECK(again.trace[i].rule == d.trace[i].rule);
            CHECK(again.trace[i].shift == d.trace[i].shift);
            CHECK(again.trace[i].cite == d.trace[i].cite);
        }
        CHECK(again.module.signature() == d.module.signature());
        for (const auto& g : d.module.generators())
            CHECK_FALSE(g.twist.contains(S::O1));
    }
}

TEST_CASE("check_rule gating")
{
    CHECK(error_of([] { check_rule(Rule::OddSplit, 4); }) == ErrorCode::ParityViolation);
    CHECK(error_of([] { check_rule(Rule::EvenSplit, 5); }) == ErrorCode::ParityViolation);
    CHECK(error_of([] { check_rule(Rule::BaseCase, 2); }) == ErrorCode::ParityViolation);
    CHECK(error_of([] { check_rule(Rule::PbfEvenIso, 3); }) == ErrorCode::ParityViolation);
    CHECK(error_of([] { check_rule(Rule::PbfOddVanish, 2); }) == ErrorCode::ParityViolation);
    CHECK(error_of([] { check_rule(Rule::TwistVanish, 0, {S::DetE}); }) == ErrorCode::TwistCheckFailed);

    const auto iso = check_rule(Rule::PbfEvenIso, 2);
    CHECK(iso.shift == 2);
    CHECK(iso.twist == TwistClass{S::DetE} + TwistClass{S::O1});

    const auto odd = check_rule(Rule::OddSplit, 7);
    CHECK(odd.shift == 11);
    CHECK(odd.twist.is_trivial());

    const auto even = check_rule(Rule::EvenSplit, 6);
    CHECK(even.shift == 5);
    CHECK(even.twist == TwistClass{S::DetEnTilde});

    CHECK_NOTHROW(check_rule(Rule::TwistVanish, 0, {S::O1, S::BaseL}));
    CHECK(check_rule(Rule::PbfOddVanish, 3).twist == TwistClass{S::DetE});
}

TEST_CASE("cross_check")
{
    const auto r7 = cross_check(7);
    CHECK(r7.match);
    CHECK(r7.witt_rank == 8);
    CHECK(r7.cell_count == 64);

    const auto r1 = cross_check(1);
    CHECK(r1.match);
    CHECK(r1.witt_rank == 1);
    CHECK(r1.cell_count == 1);

    const auto r12 = cross_check(12);
    CHECK(r12.match);
    CHECK(r12.witt_rank == 64);
    CHECK(r12.cell_count == 2048);

    for (int n = 1; n <= 20; ++n)
        CHECK(cross_check(n).match);
    CHECK(r7.describe().find("match") != std::string::npos);
}

TEST_CASE("rule names round-trip")
{
    for (Rule r : {Rule::BaseCase, Rule::OddSplit, Rule::EvenSplit, Rule::TwistVanish, Rule::PbfEvenIso,
                   Rule::PbfOddVanish})
        CHECK(rule_from_name(to_string(r)) == r);
    CHECK_FALSE(rule_from_name("Nope").has_value());
}
