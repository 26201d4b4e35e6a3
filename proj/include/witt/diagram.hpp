#pragma once

// Strict partitions placed in a staircase (or rectangular) frame, the
// decomposition of their boundary into inner segment runs, and the
// evenness predicate built on top of it.
//
// Drawing convention: box (i, c) (1-based row i, column c) is the unit
// square [c, c+1] x [-i, -(i-1)]. A staircase frame of size m has row i
// spanning columns i..m; a rectangle d x e has row i spanning 1..e.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace witt {

/// Strictly decreasing sequence of positive integers (possibly empty).
class StrictPartition {
public:
    StrictPartition() = default;

    /// Throws Error{NonPositivePart | NotStrict}. Trailing zeros are dropped.
    explicit StrictPartition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int weight() const noexcept;

    /// (a, b, ..., p1, p2, ...) for the given leading parts; the result must stay strict.
    StrictPartition prepended(std::initializer_list<int> leading) const;

    std::string to_string() const;

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

class Frame {
public:
    enum class Kind { Staircase, Rectangle };

    /// Staircase (m, m-1, ..., 1); m = 0 is the empty frame.
    static Frame staircase(int m);
    static Frame rectangle(int rows, int cols);

    Kind kind() const noexcept { return kind_; }
    bool is_staircase() const noexcept { return kind_ == Kind::Staircase; }
    int staircase_size() const noexcept { return rows_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    /// First column of row i (1-based).
    int first_column(int row) const noexcept { return is_staircase() ? row : 1; }
    /// Number of boxes in row i; zero outside the frame.
    int row_capacity(int row) const noexcept;
    bool contains(int row, int col) const noexcept;
    std::size_t box_count() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    Frame(Kind kind, int rows, int cols) : kind_(kind), rows_(rows), cols_(cols) {}

    Kind kind_;
    int rows_;
    int cols_;
};

struct Box {
    int row;
    int col;
    friend auto operator<=>(const Box&, const Box&) = default;
};

struct LatticePoint {
    int x;
    int y;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Orientation { Horizontal, Vertical };

/// A maximal straight run of `length` unit segments; `start` is its
/// lexicographically smallest endpoint (left end, or bottom end).
struct SegmentRun {
    Orientation orientation;
    LatticePoint start;
    int length;

    LatticePoint end() const noexcept
    {
        return orientation == Orientation::Horizontal ? LatticePoint{start.x + length, start.y}
                                                      : LatticePoint{start.x, start.y + length};
    }

    friend bool operator==(const SegmentRun&, const SegmentRun&) = default;
};

/// Horizontal before vertical at equal start points.
bool operator<(const SegmentRun& a, const SegmentRun& b) noexcept;

/// A partition validated against a frame. Staircase frames require a strict
/// partition; rectangles accept weakly decreasing ones.
class PlacedDiagram {
public:
    const Frame& frame() const noexcept { return frame_; }
    std::span<const int> parts() const noexcept { return parts_; }
    /// Part of row i (1-based); zero past the last part.
    int part(int row) const noexcept;
    bool contains(int row, int col) const noexcept;
    std::vector<Box> boxes() const;

    /// Only meaningful on staircase frames.
    StrictPartition strict_partition() const { return StrictPartition(parts_); }

    friend bool operator==(const PlacedDiagram&, const PlacedDiagram&) = default;

private:
    friend PlacedDiagram make_diagram(const Frame& frame, std::vector<int> parts);
    PlacedDiagram(Frame frame, std::vector<int> parts) : frame_(frame), parts_(std::move(parts)) {}

    Frame frame_;
    std::vector<int> parts_;
};

/// Throws Error{NotStrict | ExceedsFrame | NonPositivePart}.
PlacedDiagram make_diagram(const Frame& frame, std::vector<int> parts);
PlacedDiagram make_diagram(const Frame& frame, const StrictPartition& partition);

std::vector<SegmentRun> inner_segment_runs(const PlacedDiagram& d);

/// Every inner run has even length. Uses a row-bitmask scan when the
/// frame is at most 62 columns wide, otherwise falls back to the runs.
bool is_even(const PlacedDiagram& d);

/// Same predicate without building a PlacedDiagram. `parts` must already be
/// a valid partition for `frame`; nothing is checked.
bool is_even(const Frame& frame, std::span<const int> parts);

int weight(const PlacedDiagram& d) noexcept;

/// Rectangle only: the conjugate partition in the transposed frame.
PlacedDiagram transpose(const PlacedDiagram& d);

}  // namespace witt
