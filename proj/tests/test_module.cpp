#include "witt/module.hpp"

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

GradedWittModule sample()
{
    return GradedWittModule({{DegreeClass{0}, {}, std::string("a")},
                             {DegreeClass{5}, {S::DetEnTilde}, std::string("b")},
                             {DegreeClass{-3}, {S::E1, S::O1}, std::string("c")}});
}

}  // namespace

TEST_CASE("from_diagrams")
{
    const auto m7 = from_diagrams(recursive_enumerate(7));
    CHECK(m7.rank() == 8);
    CHECK(degrees(m7) == std::vector<int>{0, 3, 7, 10, 11, 14, 18, 21});
    CHECK(std::all_of(m7.generators().begin(), m7.generators().end(),
                      [](const Generator& g) { return g.twist.is_trivial(); }));
    CHECK(provenance_string(m7.generators().back().provenance) == "[6,5,4,3,2,1]");

    const auto m1 = from_diagrams(recursive_enumerate(1));
    CHECK(degrees(m1) == std::vector<int>{0});
    CHECK(from_diagrams(DiagramSet{3, {}}).is_zero());

    for (int n = 1; n <= 20; ++n)
        CHECK(from_diagrams(recursive_enumerate(n)).rank() == count(n));
}

TEST_CASE("shift")
{
    const auto m = sample();
    CHECK(shift(m, 0, {}).signature() == m.signature());

    const GradedWittModule unit({{DegreeClass{0}, {}, std::string("base")}});
    CHECK(degrees(shift(unit, 2 * 7 - 3, {})) == std::vector<int>{11});

    const TwistClass t{S::DetEnTilde, S::E1};
    CHECK(shift(shift(m, 4, t), -9, t).signature() == shift(m, -5, {}).signature());
    CHECK(shift(m, 17, t).rank() == m.rank());
}

TEST_CASE("direct_sum")
{
    const auto m = sample();
    CHECK(direct_sum(m, GradedWittModule{}).signature() == m.signature());
    const auto m7 = from_diagrams(recursive_enumerate(7));
    CHECK(direct_sum(m, m7).rank() == m.rank() + m7.rank());
    CHECK(direct_sum(m, m7).signature() == direct_sum(m7, m).signature());
    CHECK(direct_sum(direct_sum(m, m7), m).signature() == direct_sum(m, direct_sum(m7, m)).signature());

    // n = 7 splits as two copies of the n = 5 module, one shifted by 2*7-3.
    const auto m5 = from_diagrams(recursive_enumerate(5));
    CHECK(m7.signature() == direct_sum(shift(m5, 11, {}), m5).signature());
}

TEST_CASE("rank_table")
{
    const auto t7 = rank_table(from_diagrams(recursive_enumerate(7)));
    const RankTable expected{{{0, TwistClass{}}, 1}, {{1, TwistClass{}}, 1}, {{2, TwistClass{}}, 3},
                             {{3, TwistClass{}}, 3}};
    CHECK(t7 == expected);
    CHECK(rank_table(GradedWittModule{}).empty());
    CHECK(rank_table(from_diagrams(recursive_enumerate(1))) == RankTable{{{0, TwistClass{}}, 1}});

    for (int n = 1; n <= 16; ++n) {
        const auto m = from_diagrams(recursive_enumerate(n));
        std::size_t total = 0;
        for (const auto& [key, rank] : rank_table(m))
            total += rank;
        CHECK(total == m.rank());
    }
}

TEST_CASE("twisted_component")
{
    const auto m7 = from_diagrams(recursive_enumerate(7));
    CHECK(twisted_component(m7, {S::O1}).is_zero());
    CHECK(twisted_component(m7, {}).signature() == m7.signature());
    CHECK(twisted_component(sample(), {S::BaseL}).is_zero());
    CHECK(twisted_component(sample(), {S::DetEnTilde}).rank() == 1);
}
