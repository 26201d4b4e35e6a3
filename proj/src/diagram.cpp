#include "witt/diagram.hpp"

#include "witt/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace witt {

namespace {

void drop_trailing_zeros(std::vector<int>& parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

void require_positive(const std::vector<int>& parts)
{
    for (int p : parts)
        if (p <= 0)
            throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(p) + " is not positive");
}

std::string join_parts(std::span<const int> parts)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ']';
    return os.str();
}

}  // namespace

// StrictPartition

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    drop_trailing_zeros(parts_);
    require_positive(parts_);
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] <= parts_[i])
            throw Error(ErrorCode::NotStrict, join_parts(parts_) + " is not strictly decreasing");
}

int StrictPartition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

StrictPartition StrictPartition::prepended(std::initializer_list<int> leading) const
{
    std::vector<int> parts(leading);
    parts.insert(parts.end(), parts_.begin(), parts_.end());
    return StrictPartition(std::move(parts));
}

std::string StrictPartition::to_string() const
{
    return join_parts(parts_);
}

// Frame

Frame Frame::staircase(int m)
{
    if (m < 0)
        throw Error(ErrorCode::ExceedsFrame, "staircase size must be non-negative");
    return Frame(Kind::Staircase, m, m);
}

Frame Frame::rectangle(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw Error(ErrorCode::ExceedsFrame, "rectangle dimensions must be non-negative");
    return Frame(Kind::Rectangle, rows, cols);
}

int Frame::row_capacity(int row) const noexcept
{
    if (row < 1 || row > rows_)
        return 0;
    return is_staircase() ? rows_ - row + 1 : cols_;
}

bool Frame::contains(int row, int col) const noexcept
{
    if (row < 1 || row > rows_)
        return false;
    return col >= first_column(row) && col <= cols_;
}

std::size_t Frame::box_count() const noexcept
{
    const auto r = static_cast<std::size_t>(rows_);
    return is_staircase() ? r * (r + 1) / 2 : r * static_cast<std::size_t>(cols_);
}

std::string Frame::to_string() const
{
    if (is_staircase())
        return "staircase(" + std::to_string(rows_) + ")";
    return "rectangle(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
}

// SegmentRun

bool operator<(const SegmentRun& a, const SegmentRun& b) noexcept
{
    if (a.start != b.start)
        return a.start < b.start;
    if (a.orientation != b.orientation)
        return a.orientation == Orientation::Horizontal;
    return a.length < b.length;
}

// PlacedDiagram

int PlacedDiagram::part(int row) const noexcept
{
    if (row < 1 || row > static_cast<int>(parts_.size()))
        return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

bool PlacedDiagram::contains(int row, int col) const noexcept
{
    const int first = frame_.first_column(row);
    return col >= first && col < first + part(row);
}

std::vector<Box> PlacedDiagram::boxes() const
{
    std::vector<Box> out;
    for (int i = 1; i <= static_cast<int>(parts_.size()); ++i)
        for (int c = frame_.first_column(i); c < frame_.first_column(i) + part(i); ++c)
            out.push_back({i, c});
    return out;
}

PlacedDiagram make_diagram(const Frame& frame, std::vector<int> parts)
{
    drop_trailing_zeros(parts);
    require_positive(parts);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const bool ok = frame.is_staircase() ? parts[i - 1] > parts[i] : parts[i - 1] >= parts[i];
        if (!ok)
            throw Error(ErrorCode::NotStrict,
                        join_parts(parts) + (frame.is_staircase() ? " is not strictly decreasing"
                                                                  : " is not weakly decreasing"));
    }
    if (parts.size() > static_cast<std::size_t>(frame.rows()))
        throw Error(ErrorCode::ExceedsFrame, join_parts(parts) + " has more rows than " + frame.to_string());
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > frame.row_capacity(static_cast<int>(i) + 1))
            throw Error(ErrorCode::ExceedsFrame, join_parts(parts) + " does not fit in " + frame.to_string());
    return PlacedDiagram(frame, std::move(parts));
}

PlacedDiagram make_diagram(const Frame& frame, const StrictPartition& partition)
{
    return make_diagram(frame, std::vector<int>(partition.parts().begin(), partition.parts().end()));
}

int weight(const PlacedDiagram& d) noexcept
{
    return std::accumulate(d.parts().begin(), d.parts().end(), 0);
}

// Boundary decomposition.
//
// A unit segment is on the boundary of a region iff exactly one of the two
// boxes it separates belongs to the region. Inner segments are those on the
// diagram boundary but not on the frame boundary.

std::vector<SegmentRun> inner_segment_runs(const PlacedDiagram& d)
{
    const Frame& f = d.frame();
    const int rows = f.rows();
    const int cols = f.cols();

    auto in_diagram = [&](int i, int c) { return d.contains(i, c) && f.contains(i, c); };
    auto in_frame = [&](int i, int c) { return f.contains(i, c); };
    auto separates = [](auto&& region, int i1, int c1, int i2, int c2) {
        return region(i1, c1) != region(i2, c2);
    };

    std::vector<SegmentRun> runs;

    // Line y = -i separates row i (above) from row i+1 (below).
    for (int i = 0; i <= rows; ++i) {
        int c = 1;
        while (c <= cols) {
            auto inner = [&](int col) {
                return separates(in_diagram, i, col, i + 1, col) && !separates(in_frame, i, col, i + 1, col);
            };
            if (!inner(c)) {
                ++c;
                continue;
            }
            const int first = c;
            while (c <= cols && inner(c))
                ++c;
            runs.push_back({Orientation::Horizontal, {first, -i}, c - first});
        }
    }

    // Line x = c separates column c-1 from column c; row i spans y in [-i, -(i-1)].
    for (int c = 1; c <= cols + 1; ++c) {
        int i = 1;
        while (i <= rows) {
            auto inner = [&](int row) {
                return separates(in_diagram, row, c - 1, row, c) && !separates(in_frame, row, c - 1, row, c);
            };
            if (!inner(i)) {
                ++i;
                continue;
            }
            const int top = i;
            while (i <= rows && inner(i))
                ++i;
            const int bottom = i - 1;
            runs.push_back({Orientation::Vertical, {c, -bottom}, bottom - top + 1});
        }
    }

    std::sort(runs.begin(), runs.end());
    return runs;
}

namespace {

using Mask = std::uint64_t;
constexpr int kMaskColumns = 62;  // bit c for columns 0..cols+1

Mask row_mask(int first, int count)
{
    if (count <= 0)
        return 0;
    return ((Mask{1} << count) - 1) << first;
}

// Every maximal run of set bits has even length.
bool runs_even(Mask m)
{
    while (m) {
        const Mask low = m & (~m + 1);
        if (!(m & (low << 1)))
            return false;
        m &= ~(low | (low << 1));
    }
    return true;
}

bool is_even_bitmask(const Frame& f, std::span<const int> parts)
{
    const int rows = f.rows();
    auto part = [&](int i) { return i <= static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i - 1)] : 0; };

    Mask prev_d = 0, prev_f = 0;
    Mask open = 0, odd = 0;  // vertical runs currently open / of odd length so far
    for (int i = 1; i <= rows + 1; ++i) {
        const Mask cur_f = row_mask(f.first_column(i), f.row_capacity(i));
        const Mask cur_d = row_mask(f.first_column(i), std::min(part(i), f.row_capacity(i)));

        const Mask horizontal = (prev_d ^ cur_d) & ~(prev_f ^ cur_f);
        if (!runs_even(horizontal))
            return false;

        const Mask vertical = (cur_d ^ (cur_d << 1)) & ~(cur_f ^ (cur_f << 1));
        if ((open & ~vertical) & odd)
            return false;
        odd = (odd & vertical) ^ vertical;
        open = vertical;

        prev_d = cur_d;
        prev_f = cur_f;
    }
    return (odd & open) == 0;
}

}  // namespace

bool is_even(const Frame& frame, std::span<const int> parts)
{
    if (frame.cols() <= kMaskColumns)
        return is_even_bitmask(frame, parts);
    return is_even(make_diagram(frame, std::vector<int>(parts.begin(), parts.end())));
}

bool is_even(const PlacedDiagram& d)
{
    if (d.frame().cols() <= kMaskColumns)
        return is_even_bitmask(d.frame(), d.parts());
    const auto runs = inner_segment_runs(d);
    return std::all_of(runs.begin(), runs.end(), [](const SegmentRun& r) { return r.length % 2 == 0; });
}

PlacedDiagram transpose(const PlacedDiagram& d)
{
    const Frame& f = d.frame();
    if (f.is_staircase())
        throw Error(ErrorCode::ExceedsFrame, "transpose is defined on rectangular frames only");
    std::vector<int> conjugate;
    for (int c = 1; c <= d.part(1); ++c) {
        int len = 0;
        while (d.part(len + 1) >= c)
            ++len;
        conjugate.push_back(len);
    }
    return make_diagram(Frame::rectangle(f.cols(), f.rows()), std::move(conjugate));
}

}  // namespace witt
