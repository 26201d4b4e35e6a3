#include "witt/error.hpp"
#include "witt/serialize.hpp"

#include <doctest.h>

using namespace witt;
using S = LineBundleSymbol;

TEST_CASE("diagram record layout")
{
    const auto d = make_diagram(Frame::staircase(6), std::vector<int>{6, 5});
    const auto expected = json::parse(R"({"frame":{"kind":"staircase","m":6},"parts":[6,5],"weight":11})");
    CHECK(diagram_to_json(d) == expected);
    CHECK(diagram_from_json(expected) == d);

    const auto r = make_diagram(Frame::rectangle(2, 3), std::vector<int>{3, 1});
    CHECK(diagram_from_json(diagram_to_json(r)) == r);
}

TEST_CASE("diagram records are validated on read")
{
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"frame":{"kind":"staircase","m":3},"parts":[2,2]})")), Error);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"frame":{"kind":"staircase","m":3},"parts":[4]})")), Error);
    CHECK_THROWS(diagram_from_json(json::parse(R"({"frame":{"kind":"hexagon","m":3},"parts":[]})")));
    CHECK_THROWS(diagram_from_json(json::parse(R"({"frame":{"kind":"staircase","m":3},"parts":[2],"weight":5})")));
}

TEST_CASE("diagram sets round-trip")
{
    for (int n = 1; n <= 12; ++n) {
        const auto s = recursive_enumerate(n);
        const auto j = diagram_set_to_json(s);
        REQUIRE(j.size() == s.size());
        const auto back = diagram_set_from_json(j);
        CHECK(back.n == s.n);
        CHECK(back.members == s.members);
        CHECK(diagram_set_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("twist encoding")
{
    CHECK(twist_to_json({S::E1, S::DetEnTilde}) == json::parse(R"(["DetEnTilde","E1"])"));
    CHECK(twist_to_json({}) == json::array());
    for (unsigned b = 0; b < 64; ++b) {
        const auto t = TwistClass::from_bits(static_cast<std::uint8_t>(b));
        CHECK(twist_from_json(twist_to_json(t)) == t);
    }
    CHECK_THROWS(twist_from_json(json::parse(R"(["O2"])")));
}

TEST_CASE("module round-trip")
{
    for (int n = 1; n <= 12; ++n) {
        const auto m = decompose(n).module;
        const auto j = module_to_json(m);
        const auto back = module_from_json(j);
        CHECK(back.signature() == m.signature());
        CHECK(module_to_json(back) == j);
    }
    const auto m7 = from_diagrams(recursive_enumerate(7));
    const auto j7 = module_to_json(m7);
    CHECK(module_to_json(module_from_json(j7)) == j7);
    bool found = false;
    for (const auto& g : j7)
        if (g.at("provenance") == "[6,5]") {
            CHECK(g.at("degree") == 11);
            CHECK(g.at("residue") == 3);
            CHECK(g.at("twist") == json::array());
            found = true;
        }
    CHECK(found);

    auto bad = j7;
    bad[0]["residue"] = 1 + bad[0]["residue"].get<int>();
    CHECK_THROWS_AS(module_from_json(bad), Error);
}

TEST_CASE("trace round-trip")
{
    for (int n = 1; n <= 14; ++n) {
        const auto t = decompose(n).trace;
        const auto j = trace_to_json(t);
        REQUIRE(j.size() == t.size());
        const auto back = trace_from_json(j);
        REQUIRE(back.size() == t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK(back[i].rule == t[i].rule);
            CHECK(back[i].parameter == t[i].parameter);
            CHECK(back[i].shift == t[i].shift);
            CHECK(back[i].twist == t[i].twist);
            CHECK(back[i].cite == t[i].cite);
        }
    }
    const auto first = trace_to_json(decompose(7).trace).at(0);
    CHECK(first.at("rule") == "OddSplit");
    CHECK(first.at("n") == 7);
    CHECK(first.at("shift") == 11);
    CHECK(first.at("twist") == json::array());
}

TEST_CASE("CSV projections")
{
    const auto s = recursive_enumerate(5);
    const auto csv = diagram_set_to_csv(s);
    CHECK(csv.rfind("m,parts,weight\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(s.size()) + 1);
    CHECK(csv.find("\n4,4 3,7\n") != std::string::npos);

    const auto mcsv = module_to_csv(decompose(5).module);
    CHECK(mcsv.rfind("degree,residue,twist,provenance\n", 0) == 0);
    CHECK(std::count(mcsv.begin(), mcsv.end(), '\n') == 5);

    CHECK(poincare_to_csv(poincare_polynomial(3)) == "degree,coefficient\n0,1\n3,1\n");
    CHECK(rect_set_to_csv(1, 2, {{}, {2}}) == "rows,cols,parts,weight\n1,2,,0\n1,2,2,2\n");
}

TEST_CASE("Poincare JSON")
{
    const auto j = poincare_to_json(poincare_polynomial(5));
    REQUIRE(j.is_array());
    int prev = -1;
    std::uint64_t total = 0;
    for (const auto& term : j) {
        CHECK(term.at("degree").get<int>() > prev);
        prev = term.at("degree").get<int>();
        total += term.at("coefficient").get<std::uint64_t>();
    }
    CHECK(total == 4);
}
