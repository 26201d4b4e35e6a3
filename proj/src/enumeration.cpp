#include "witt/enumeration.hpp"

#include "witt/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

namespace witt {

// PoincarePolynomial

PoincarePolynomial::PoincarePolynomial(std::map<int, std::uint64_t> coefficients)
{
    for (auto [d, c] : coefficients)
        add(d, c);
}

void PoincarePolynomial::add(int degree, std::uint64_t c)
{
    if (c != 0)
        coeffs_[degree] += c;
}

std::uint64_t PoincarePolynomial::coefficient(int degree) const
{
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

int PoincarePolynomial::degree() const
{
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::uint64_t PoincarePolynomial::at_one() const
{
    std::uint64_t total = 0;
    for (auto [d, c] : coeffs_)
        total += c;
    return total;
}

PoincarePolynomial PoincarePolynomial::times_one_plus_q_pow(int k) const
{
    PoincarePolynomial out;
    for (auto [d, c] : coeffs_) {
        out.add(d, c);
        out.add(d + k, c);
    }
    return out;
}

PoincarePolynomial PoincarePolynomial::reversed(int d) const
{
    PoincarePolynomial out;
    for (auto [e, c] : coeffs_)
        out.add(d - e, c);
    return out;
}

std::string PoincarePolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [d, c] : coeffs_) {
        if (!first)
            os << " + ";
        first = false;
        if (d == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c << '*';
        os << 'q';
        if (d != 1)
            os << '^' << d;
    }
    return os.str();
}

// Enumeration

namespace {

void parts_from_subset(std::uint32_t subset, int m, std::vector<int>& parts)
{
    parts.clear();
    for (int p = m; p >= 1; --p)
        if (subset & (std::uint32_t{1} << (p - 1)))
            parts.push_back(p);
}

}  // namespace

DiagramSet oracle_enumerate(int n, unsigned threads)
{
    if (n < 1)
        throw Error(ErrorCode::BoundExceeded, "n must be at least 1");
    if (n > kOracleMaxN)
        throw Error(ErrorCode::BoundExceeded,
                    "oracle enumeration is limited to n <= " + std::to_string(kOracleMaxN));

    const int m = n - 1;
    const Frame frame = Frame::staircase(m);
    const std::uint32_t total = std::uint32_t{1} << m;

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    // Not worth spawning workers for small frames.
    if (total < (1u << 12))
        threads = 1;
    threads = std::min<unsigned>(threads, total);

    std::vector<std::vector<StrictPartition>> found(threads);
    auto work = [&](unsigned id) {
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(m));
        for (std::uint32_t s = id; s < total; s += threads) {
            parts_from_subset(s, m, parts);
            // strict with largest part <= m, so it fits the staircase
            if (is_even(frame, parts))
                found[id].emplace_back(parts);
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back(work, id);
    }

    DiagramSet out{n, {}};
    for (auto& chunk : found)
        out.members.insert(std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    return out;
}

DiagramSet recursive_enumerate(int n)
{
    if (n < 1)
        throw Error(ErrorCode::BoundExceeded, "n must be at least 1");
    if (n == 1)
        return DiagramSet{1, {StrictPartition{}}};

    DiagramSet out{n, {}};
    if (n % 2 == 1) {
        for (const auto& lambda : recursive_enumerate(n - 2).members) {
            out.members.insert(lambda.prepended({n - 1, n - 2}));
            out.members.insert(lambda);
        }
    } else {
        for (const auto& lambda : recursive_enumerate(n - 1).members) {
            out.members.insert(lambda.prepended({n - 1}));
            out.members.insert(lambda);
        }
    }
    return out;
}

std::uint64_t count(int n)
{
    if (n < 1)
        throw Error(ErrorCode::BoundExceeded, "n must be at least 1");
    if (n / 2 >= 64)
        throw Error(ErrorCode::BoundExceeded, "count does not fit in 64 bits");
    const std::uint64_t closed_form = std::uint64_t{1} << (n / 2);
    if (n <= kCountCheckMaxN && recursive_enumerate(n).size() != closed_form)
        throw Error(ErrorCode::Mismatch, "recursive enumeration disagrees with 2^floor(n/2) at n=" + std::to_string(n));
    return closed_form;
}

PoincarePolynomial poincare_polynomial(const DiagramSet& s)
{
    std::map<int, std::uint64_t> coeffs;
    for (const auto& lambda : s.members)
        ++coeffs[lambda.weight()];
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial poincare_polynomial(int n)
{
    return poincare_polynomial(recursive_enumerate(n));
}

namespace {

void weakly_decreasing_in_box(int rows, int max_part, std::vector<int>& prefix,
                              const std::function<void(const std::vector<int>&)>& visit)
{
    visit(prefix);
    if (static_cast<int>(prefix.size()) == rows)
        return;
    for (int p = 1; p <= max_part; ++p) {
        prefix.push_back(p);
        weakly_decreasing_in_box(rows, p, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

std::set<std::vector<int>> rect_enumerate(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw Error(ErrorCode::BoundExceeded, "rectangle dimensions must be positive");
    if (rows * cols > kRectMaxArea)
        throw Error(ErrorCode::BoundExceeded,
                    "rectangle area is limited to " + std::to_string(kRectMaxArea) + " boxes");

    const Frame frame = Frame::rectangle(rows, cols);
    std::set<std::vector<int>> out;
    std::vector<int> prefix;
    weakly_decreasing_in_box(rows, cols, prefix, [&](const std::vector<int>& parts) {
        if (is_even(make_diagram(frame, parts)))
            out.insert(parts);
    });
    return out;
}

}  // namespace witt
