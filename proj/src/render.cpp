#include "witt/render.hpp"

#include "witt/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace witt {

namespace {

// A unit segment keyed by orientation and its lexicographically smaller endpoint.
using UnitSegment = std::tuple<Orientation, int, int>;

void box_edges(int row, int col, auto&& emit)
{
    emit(UnitSegment{Orientation::Horizontal, col, -row + 1});
    emit(UnitSegment{Orientation::Horizontal, col, -row});
    emit(UnitSegment{Orientation::Vertical, col, -row});
    emit(UnitSegment{Orientation::Vertical, col + 1, -row});
}

std::set<UnitSegment> frame_outline(const Frame& f)
{
    std::map<UnitSegment, int> hits;
    for (int i = 1; i <= f.rows(); ++i)
        for (int c = f.first_column(i); c <= f.cols(); ++c)
            box_edges(i, c, [&](UnitSegment s) { ++hits[s]; });
    std::set<UnitSegment> out;
    for (const auto& [s, k] : hits)
        if (k == 1)
            out.insert(s);
    return out;
}

std::set<UnitSegment> drawn_edges(const PlacedDiagram& d)
{
    std::set<UnitSegment> out = frame_outline(d.frame());
    for (const Box& b : d.boxes())
        box_edges(b.row, b.col, [&](UnitSegment s) { out.insert(s); });
    return out;
}

std::set<UnitSegment> inner_unit_segments(const PlacedDiagram& d)
{
    std::set<UnitSegment> out;
    for (const auto& run : inner_segment_runs(d))
        for (int k = 0; k < run.length; ++k) {
            if (run.orientation == Orientation::Horizontal)
                out.insert({Orientation::Horizontal, run.start.x + k, run.start.y});
            else
                out.insert({Orientation::Vertical, run.start.x, run.start.y + k});
        }
    return out;
}

constexpr int kBoxWidth = 4;
constexpr int kBoxHeight = 2;
constexpr const char* kAnsiMark = "\x1b[1;31m";
constexpr const char* kAnsiReset = "\x1b[0m";

}  // namespace

std::string render_ascii(const PlacedDiagram& d, const RenderSpec& spec)
{
    const Frame& f = d.frame();
    if (f.rows() == 0 || f.cols() == 0)
        return {};

    const int width = kBoxWidth * f.cols() + 1;
    const int height = kBoxHeight * f.rows() + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
    std::vector<std::vector<bool>> marked(static_cast<std::size_t>(height),
                                          std::vector<bool>(static_cast<std::size_t>(width), false));

    auto at = [&](int x, int y) -> char& {  // lattice point
        return canvas[static_cast<std::size_t>(-y * kBoxHeight)][static_cast<std::size_t>((x - 1) * kBoxWidth)];
    };

    if (spec.shade)
        for (const Box& b : d.boxes()) {
            auto& line = canvas[static_cast<std::size_t>((b.row - 1) * kBoxHeight + 1)];
            for (int k = 1; k < kBoxWidth; ++k)
                line[static_cast<std::size_t>((b.col - 1) * kBoxWidth + k)] = '#';
        }

    const std::set<UnitSegment> inner = spec.mark_inner ? inner_unit_segments(d) : std::set<UnitSegment>{};
    std::set<UnitSegment> edges = drawn_edges(d);
    edges.insert(inner.begin(), inner.end());

    for (const auto& seg : edges) {
        const auto [o, x, y] = seg;
        const bool is_inner = inner.contains(seg);
        if (o == Orientation::Horizontal) {
            const auto row = static_cast<std::size_t>(-y * kBoxHeight);
            for (int k = 1; k < kBoxWidth; ++k) {
                const auto col = static_cast<std::size_t>((x - 1) * kBoxWidth + k);
                canvas[row][col] = is_inner ? '=' : '-';
                marked[row][col] = is_inner;
            }
            at(x, y) = '+';
            at(x + 1, y) = '+';
        } else {
            const auto col = static_cast<std::size_t>((x - 1) * kBoxWidth);
            for (int k = 1; k < kBoxHeight; ++k) {
                const auto row = static_cast<std::size_t>(-(y + 1) * kBoxHeight + k);
                canvas[row][col] = is_inner ? 'H' : '|';
                marked[row][col] = is_inner;
            }
            at(x, y) = '+';
            at(x, y + 1) = '+';
        }
    }

    std::string out;
    for (std::size_t r = 0; r < canvas.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < canvas[r].size(); ++c) {
            if (spec.color && marked[r][c])
                line += std::string(kAnsiMark) + canvas[r][c] + kAnsiReset;
            else
                line += canvas[r][c];
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_ascii(const DiagramSet& ds, const RenderSpec& spec)
{
    std::string out;
    bool first = true;
    for (const auto& lambda : ds.members) {
        if (!first)
            out += '\n';
        first = false;
        out += lambda.to_string() + "  weight " + std::to_string(lambda.weight()) + '\n';
        out += render_ascii(make_diagram(ds.frame(), lambda), spec);
    }
    return out;
}

std::string render_svg(std::span<const PlacedDiagram> diagrams, const RenderSpec& spec)
{
    if (spec.cell_px < 4)
        throw Error(ErrorCode::BoundExceeded, "cell_px must be at least 4");
    const int cell = spec.cell_px;

    int tile_w = 2 * cell, tile_h = 2 * cell;
    for (const auto& d : diagrams) {
        tile_w = std::max(tile_w, (d.frame().cols() + 2) * cell);
        tile_h = std::max(tile_h, (d.frame().rows() + 3) * cell);  // extra row for the caption
    }
    const int n = static_cast<int>(diagrams.size());
    const int cols = std::max(1, std::min(n, kGalleryColumns));
    const int rows = std::max(1, (n + kGalleryColumns - 1) / kGalleryColumns);
    const int width = cols * tile_w;
    const int height = rows * tile_h;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

    auto px = [cell](int x) { return x * cell; };
    auto py = [cell](int y) { return (1 - y) * cell; };
    auto line = [&](const char* cls, int x1, int y1, int x2, int y2, int stroke) {
        os << "    <line class=\"" << cls << "\" x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
           << "\" y2=\"" << py(y2) << "\" stroke=\"black\" stroke-width=\"" << stroke
           << "\" stroke-linecap=\"square\"/>\n";
    };

    for (int k = 0; k < n; ++k) {
        const PlacedDiagram& d = diagrams[static_cast<std::size_t>(k)];
        const int ox = (k % kGalleryColumns) * tile_w;
        const int oy = (k / kGalleryColumns) * tile_h;
        std::string parts;
        for (std::size_t i = 0; i < d.parts().size(); ++i)
            parts += (i ? "," : "") + std::to_string(d.parts()[i]);

        os << "  <g class=\"diagram\" id=\"diagram-" << k << "\" data-parts=\"" << parts << "\" transform=\"translate("
           << ox << ',' << oy << ")\">\n";
        if (spec.shade)
            for (const Box& b : d.boxes())
                os << "    <rect class=\"cell\" x=\"" << px(b.col) << "\" y=\"" << py(-b.row + 1) << "\" width=\""
                   << cell << "\" height=\"" << cell << "\" fill=\"black\" fill-opacity=\"0.2\"/>\n";
        for (const auto& [o, x, y] : drawn_edges(d)) {
            if (o == Orientation::Horizontal)
                line("grid", x, y, x + 1, y, 1);
            else
                line("grid", x, y, x, y + 1, 1);
        }
        if (spec.mark_inner)
            for (const auto& run : inner_segment_runs(d)) {
                const LatticePoint e = run.end();
                line("inner", run.start.x, run.start.y, e.x, e.y, 3);
            }
        os << "    <text x=\"" << px(1) << "\" y=\"" << py(-d.frame().rows()) + cell
           << "\" font-family=\"monospace\" font-size=\"" << std::max(8, cell * 3 / 5) << "\">[" << parts
           << "]</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const DiagramSet& ds, const RenderSpec& spec)
{
    std::vector<PlacedDiagram> diagrams;
    diagrams.reserve(ds.size());
    for (const auto& lambda : ds.members)
        diagrams.push_back(make_diagram(ds.frame(), lambda));
    return render_svg(diagrams, spec);
}

}  // namespace witt
