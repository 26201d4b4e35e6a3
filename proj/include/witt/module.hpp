#pragma once

// Graded free modules over the total Witt ring of the base, represented as
// multisets of generators. Base coefficients are never evaluated.

#include "witt/diagram.hpp"
#include "witt/enumeration.hpp"
#include "witt/twist.hpp"

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace witt {

/// Where a generator came from: a diagram, or a derivation label.
using Provenance = std::variant<StrictPartition, std::string>;

std::string provenance_string(const Provenance& p);

struct Generator {
    DegreeClass degree;
    TwistClass twist;
    Provenance provenance;
};

class GradedWittModule {
public:
    GradedWittModule() = default;
    explicit GradedWittModule(std::vector<Generator> generators) : generators_(std::move(generators)) {}

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    bool is_zero() const noexcept { return generators_.empty(); }

    /// Sorted (degree, twist) pairs; two modules are isomorphic iff these agree.
    std::vector<std::pair<int, TwistClass>> signature() const;

private:
    std::vector<Generator> generators_;
};

/// Keyed by (degree mod 4, twist).
using RankTable = std::map<std::pair<int, TwistClass>, std::size_t>;

GradedWittModule from_diagrams(const DiagramSet& s);

/// Each degree moves by d and each twist picks up t.
GradedWittModule shift(const GradedWittModule& m, int d, TwistClass t);

GradedWittModule direct_sum(const GradedWittModule& a, const GradedWittModule& b);

RankTable rank_table(const GradedWittModule& m);

/// Generators whose twist is exactly t.
GradedWittModule twisted_component(const GradedWittModule& m, TwistClass t);

}  // namespace witt
