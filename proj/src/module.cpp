#include "witt/module.hpp"

#include <algorithm>

namespace witt {

std::string provenance_string(const Provenance& p)
{
    if (const auto* lambda = std::get_if<StrictPartition>(&p))
        return lambda->to_string();
    return std::get<std::string>(p);
}

std::vector<std::pair<int, TwistClass>> GradedWittModule::signature() const
{
    std::vector<std::pair<int, TwistClass>> sig;
    sig.reserve(generators_.size());
    for (const auto& g : generators_)
        sig.emplace_back(g.degree.degree, g.twist);
    std::sort(sig.begin(), sig.end());
    return sig;
}

GradedWittModule from_diagrams(const DiagramSet& s)
{
    std::vector<Generator> gens;
    gens.reserve(s.size());
    for (const auto& lambda : s.members)
        gens.push_back({DegreeClass{lambda.weight()}, TwistClass{}, lambda});
    return GradedWittModule(std::move(gens));
}

GradedWittModule shift(const GradedWittModule& m, int d, TwistClass t)
{
    std::vector<Generator> gens = m.generators();
    for (auto& g : gens) {
        g.degree.degree += d;
        g.twist += t;
    }
    return GradedWittModule(std::move(gens));
}

GradedWittModule direct_sum(const GradedWittModule& a, const GradedWittModule& b)
{
    std::vector<Generator> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return GradedWittModule(std::move(gens));
}

RankTable rank_table(const GradedWittModule& m)
{
    RankTable table;
    for (const auto& g : m.generators())
        ++table[{g.degree.residue(), g.twist}];
    return table;
}

GradedWittModule twisted_component(const GradedWittModule& m, TwistClass t)
{
    std::vector<Generator> gens;
    std::copy_if(m.generators().begin(), m.generators().end(), std::back_inserter(gens),
                 [t](const Generator& g) { return g.twist == t; });
    return GradedWittModule(std::move(gens));
}

}  // namespace witt
