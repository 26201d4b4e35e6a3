#include "oracle.hpp"

#include <algorithm>

namespace oracle {

namespace {

using Cell = std::pair<int, int>;                  // (row, col)
using Edge = std::tuple<bool, int, int>;           // (horizontal, x, y) of the smaller endpoint

std::set<Cell> frame_cells(const Shape& s)
{
    std::set<Cell> cells;
    for (int i = 1; i <= s.rows; ++i)
        for (int c = (s.staircase ? i : 1); c <= s.cols; ++c)
            cells.insert({i, c});
    return cells;
}

std::set<Cell> diagram_cells(const Shape& s)
{
    std::set<Cell> cells;
    for (int i = 1; i <= static_cast<int>(s.parts.size()); ++i) {
        const int first = s.staircase ? i : 1;
        for (int k = 0; k < s.parts[static_cast<std::size_t>(i - 1)]; ++k)
            cells.insert({i, first + k});
    }
    return cells;
}

std::set<Edge> boundary(const std::set<Cell>& cells)
{
    std::map<Edge, int> hits;
    for (auto [i, c] : cells) {
        // square [c, c+1] x [-i, -i+1]
        ++hits[{true, c, -i + 1}];
        ++hits[{true, c, -i}];
        ++hits[{false, c, -i}];
        ++hits[{false, c + 1, -i}];
    }
    std::set<Edge> out;
    for (auto& [e, k] : hits)
        if (k % 2 == 1)
            out.insert(e);
    return out;
}

}  // namespace

std::vector<Run> inner_runs(const Shape& s)
{
    const auto db = boundary(diagram_cells(s));
    const auto fb = boundary(frame_cells(s));
    std::set<Edge> inner;
    std::set_difference(db.begin(), db.end(), fb.begin(), fb.end(), std::inserter(inner, inner.end()));

    std::vector<Run> runs;
    std::set<Edge> used;
    for (const auto& e : inner) {
        if (used.contains(e))
            continue;
        const bool h = std::get<0>(e);
        // Walk back to the start of the run, then forward to its end.
        auto step = [h](int x0, int y0, int d) { return h ? Edge{true, x0 + d, y0} : Edge{false, x0, y0 + d}; };
        Edge start = e;
        while (inner.contains(step(std::get<1>(start), std::get<2>(start), -1)))
            start = step(std::get<1>(start), std::get<2>(start), -1);
        int length = 0;
        Edge cur = start;
        while (inner.contains(cur)) {
            used.insert(cur);
            ++length;
            cur = step(std::get<1>(cur), std::get<2>(cur), 1);
        }
        runs.push_back({h, std::get<1>(start), std::get<2>(start), length});
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
        if (std::tie(a.x, a.y) != std::tie(b.x, b.y))
            return std::tie(a.x, a.y) < std::tie(b.x, b.y);
        return a.horizontal && !b.horizontal;
    });
    return runs;
}

bool is_even(const Shape& s)
{
    for (const auto& r : inner_runs(s))
        if (r.length % 2 != 0)
            return false;
    return true;
}

std::vector<std::vector<int>> strict_partitions(int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    auto descend = [&](auto&& self, int below) -> void {
        out.push_back(prefix);
        for (int p = below - 1; p >= 1; --p) {
            prefix.push_back(p);
            self(self, p);
            prefix.pop_back();
        }
    };
    descend(descend, m + 1);
    return out;
}

std::set<std::vector<int>> even_staircase(int m)
{
    std::set<std::vector<int>> out;
    for (auto& p : strict_partitions(m))
        if (is_even(Shape{true, m, m, p}))
            out.insert(p);
    return out;
}

std::map<int, unsigned long long> weight_histogram(int n)
{
    std::map<int, unsigned long long> h;
    for (const auto& p : even_staircase(n - 1)) {
        int w = 0;
        for (int x : p)
            w += x;
        ++h[w];
    }
    return h;
}

}  // namespace oracle
