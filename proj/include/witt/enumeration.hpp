#pragma once

#include "witt/diagram.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace witt {

/// Practical limits for the brute-force routes.
inline constexpr int kOracleMaxN = 26;
inline constexpr int kRectMaxArea = 30;
/// count() cross-checks against the recursive generator up to this n.
inline constexpr int kCountCheckMaxN = 24;

/// The even diagrams in staircase(n-1), ordered lexicographically on parts.
struct DiagramSet {
    int n = 1;
    std::set<StrictPartition> members;

    Frame frame() const { return Frame::staircase(n - 1); }
    std::size_t size() const noexcept { return members.size(); }

    friend bool operator==(const DiagramSet&, const DiagramSet&) = default;
};

/// Sum over members of q^weight, as degree -> multiplicity.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::map<int, std::uint64_t> coefficients);

    static PoincarePolynomial one() { return PoincarePolynomial(std::map<int, std::uint64_t>{{0, 1}}); }

    const std::map<int, std::uint64_t>& coefficients() const noexcept { return coeffs_; }
    std::uint64_t coefficient(int degree) const;
    int degree() const;
    std::uint64_t at_one() const;

    /// (1 + q^k) * this
    PoincarePolynomial times_one_plus_q_pow(int k) const;
    /// q^d * P(1/q)
    PoincarePolynomial reversed(int d) const;

    std::string to_string() const;

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    void add(int degree, std::uint64_t c);

    std::map<int, std::uint64_t> coeffs_;
};

/// Tests every subset of {1, ..., n-1}. Runs on up to `threads` workers
/// (0 = hardware concurrency); the result does not depend on scheduling.
/// Throws Error{BoundExceeded} above kOracleMaxN.
DiagramSet oracle_enumerate(int n, unsigned threads = 0);

/// Builds the set from the two classes at each level: for odd n, diagrams
/// with full first two rows plus those with two empty right columns; for
/// even n, those with a full first row plus those with an empty last column.
DiagramSet recursive_enumerate(int n);

/// 2^floor(n/2); verified against recursive_enumerate up to kCountCheckMaxN.
std::uint64_t count(int n);

PoincarePolynomial poincare_polynomial(int n);
PoincarePolynomial poincare_polynomial(const DiagramSet& s);

/// Weakly decreasing partitions in the rows x cols box that are even.
/// Throws Error{BoundExceeded} when rows * cols > kRectMaxArea.
std::set<std::vector<int>> rect_enumerate(int rows, int cols);

}  // namespace witt
