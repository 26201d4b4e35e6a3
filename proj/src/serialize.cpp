#include "witt/serialize.hpp"

#include "witt/error.hpp"

#include <sstream>

namespace witt {

namespace {

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += items[i];
    }
    return out;
}

std::string parts_field(std::span<const int> parts)
{
    std::vector<std::string> items;
    for (int p : parts)
        items.push_back(std::to_string(p));
    return join(items, ' ');
}

Provenance provenance_from_string(const std::string& s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        return s;
    std::vector<int> parts;
    std::istringstream is(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(is, item, ','))
        parts.push_back(std::stoi(item));
    return StrictPartition(std::move(parts));
}

}  // namespace

json frame_to_json(const Frame& f)
{
    if (f.is_staircase())
        return {{"kind", "staircase"}, {"m", f.staircase_size()}};
    return {{"kind", "rectangle"}, {"rows", f.rows()}, {"cols", f.cols()}};
}

Frame frame_from_json(const json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "staircase")
        return Frame::staircase(j.at("m").get<int>());
    if (kind == "rectangle")
        return Frame::rectangle(j.at("rows").get<int>(), j.at("cols").get<int>());
    throw json::other_error::create(501, "unknown frame kind " + kind, &j);
}

json diagram_to_json(const PlacedDiagram& d)
{
    return {{"frame", frame_to_json(d.frame())},
            {"parts", std::vector<int>(d.parts().begin(), d.parts().end())},
            {"weight", weight(d)}};
}

PlacedDiagram diagram_from_json(const json& j)
{
    PlacedDiagram d = make_diagram(frame_from_json(j.at("frame")), j.at("parts").get<std::vector<int>>());
    if (j.contains("weight") && j.at("weight").get<int>() != weight(d))
        throw Error(ErrorCode::Mismatch, "recorded weight disagrees with the parts");
    return d;
}

json diagram_set_to_json(const DiagramSet& s)
{
    json out = json::array();
    const Frame frame = s.frame();
    for (const auto& lambda : s.members)
        out.push_back(diagram_to_json(make_diagram(frame, lambda)));
    return out;
}

DiagramSet diagram_set_from_json(const json& j)
{
    DiagramSet s;
    bool have_frame = false;
    for (const auto& record : j) {
        const PlacedDiagram d = diagram_from_json(record);
        if (!d.frame().is_staircase())
            throw Error(ErrorCode::ExceedsFrame, "diagram sets live in staircase frames");
        const int n = d.frame().staircase_size() + 1;
        if (have_frame && n != s.n)
            throw Error(ErrorCode::ExceedsFrame, "records use different frames");
        s.n = n;
        have_frame = true;
        s.members.insert(d.strict_partition());
    }
    return s;
}

json twist_to_json(TwistClass t)
{
    return t.names();
}

TwistClass twist_from_json(const json& j)
{
    TwistClass t;
    for (const auto& item : j) {
        const auto name = item.get<std::string>();
        const auto sym = symbol_from_name(name);
        if (!sym)
            throw json::other_error::create(501, "unknown line bundle symbol " + name, &j);
        t += TwistClass{*sym};
    }
    return t;
}

json module_to_json(const GradedWittModule& m)
{
    json out = json::array();
    for (const auto& g : m.generators())
        out.push_back({{"degree", g.degree.degree},
                       {"residue", g.degree.residue()},
                       {"twist", twist_to_json(g.twist)},
                       {"provenance", provenance_string(g.provenance)}});
    return out;
}

GradedWittModule module_from_json(const json& j)
{
    std::vector<Generator> gens;
    for (const auto& g : j) {
        Generator gen{DegreeClass{g.at("degree").get<int>()}, twist_from_json(g.at("twist")),
                      provenance_from_string(g.at("provenance").get<std::string>())};
        if (g.contains("residue") && g.at("residue").get<int>() != gen.degree.residue())
            throw Error(ErrorCode::Mismatch, "recorded residue disagrees with the degree");
        gens.push_back(std::move(gen));
    }
    return GradedWittModule(std::move(gens));
}

json rank_table_to_json(const RankTable& t)
{
    json out = json::array();
    for (const auto& [key, rank] : t)
        out.push_back({{"residue", key.first}, {"twist", twist_to_json(key.second)}, {"rank", rank}});
    return out;
}

json trace_to_json(const DerivationTrace& t)
{
    json out = json::array();
    for (const auto& step : t)
        out.push_back({{"rule", std::string(to_string(step.rule))},
                       {"n", step.parameter},
                       {"shift", step.shift},
                       {"twist", twist_to_json(step.twist)},
                       {"cite", step.cite}});
    return out;
}

DerivationTrace trace_from_json(const json& j)
{
    DerivationTrace trace;
    for (const auto& s : j) {
        const auto name = s.at("rule").get<std::string>();
        const auto rule = rule_from_name(name);
        if (!rule)
            throw json::other_error::create(501, "unknown rule " + name, &j);
        trace.push_back(TraceStep{*rule, s.at("n").get<int>(), s.at("shift").get<int>(), twist_from_json(s.at("twist")),
                                  s.at("cite").get<std::string>()});
    }
    return trace;
}

json poincare_to_json(const PoincarePolynomial& p)
{
    json out = json::array();
    for (const auto& [d, c] : p.coefficients())
        out.push_back({{"degree", d}, {"coefficient", c}});
    return out;
}

std::string diagram_set_to_csv(const DiagramSet& s)
{
    std::string out = "m,parts,weight\n";
    for (const auto& lambda : s.members)
        out += std::to_string(s.n - 1) + ',' + parts_field(lambda.parts()) + ',' + std::to_string(lambda.weight()) +
               '\n';
    return out;
}

std::string module_to_csv(const GradedWittModule& m)
{
    std::string out = "degree,residue,twist,provenance\n";
    for (const auto& g : m.generators())
        out += std::to_string(g.degree.degree) + ',' + std::to_string(g.degree.residue()) + ',' +
               join(g.twist.names(), ';') + ",\"" + provenance_string(g.provenance) + "\"\n";
    return out;
}

std::string poincare_to_csv(const PoincarePolynomial& p)
{
    std::string out = "degree,coefficient\n";
    for (const auto& [d, c] : p.coefficients())
        out += std::to_string(d) + ',' + std::to_string(c) + '\n';
    return out;
}

std::string rect_set_to_csv(int rows, int cols, const std::set<std::vector<int>>& parts)
{
    std::string out = "rows,cols,parts,weight\n";
    for (const auto& p : parts) {
        int w = 0;
        for (int x : p)
            w += x;
        out += std::to_string(rows) + ',' + std::to_string(cols) + ',' + parts_field(p) + ',' + std::to_string(w) +
               '\n';
    }
    return out;
}

}  // namespace witt
