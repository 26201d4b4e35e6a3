#pragma once

#include "witt/diagram.hpp"
#include "witt/enumeration.hpp"

#include <span>
#include <string>

namespace witt {

struct RenderSpec {
    int cell_px = 20;       // SVG only, at least 4
    bool shade = true;      // fill the diagram region
    bool mark_inner = true; // highlight inner segment runs
    bool color = false;     // ANSI color for ASCII inner marks
};

/// ASCII picture of the frame with the diagram drawn in it.
///
/// Each box is four characters wide and two lines tall. Frame outline and
/// the grid of the diagram use '-' and '|', shaded boxes are "###", inner
/// runs are drawn as '=' (horizontal) and 'H' (vertical), corners are '+'.
std::string render_ascii(const PlacedDiagram& d, const RenderSpec& spec = {});

/// All members, each preceded by a "parts  weight" caption line.
std::string render_ascii(const DiagramSet& ds, const RenderSpec& spec = {});

/// SVG 1.1 gallery, four diagrams per row. Every diagram is one
/// <g class="diagram"> whose inner runs are <line class="inner"> elements
/// in group-local pixels: x = lattice_x * cell_px, y = (1 - lattice_y) * cell_px.
std::string render_svg(std::span<const PlacedDiagram> diagrams, const RenderSpec& spec = {});
std::string render_svg(const DiagramSet& ds, const RenderSpec& spec = {});

inline constexpr int kGalleryColumns = 4;

}  // namespace witt
