#pragma once

#include <string>

#include "ferrers/castelnuovo.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

enum class DiagramStyle {
    /// Chess-coloured Ferrers diagram, rows bottom-up, '#' black / '.' white.
    ferrers,
    /// Column diagram of a Castelnuovo polynomial, column m of height s(m),
    /// black iff m is even.
    castelnuovo,
    /// Top-justified diagram labelled +1/-1, '+' in the top-left corner.
    problem10,
};

enum class RenderFormat { ascii, svg };

struct RenderSpec {
    DiagramStyle style = DiagramStyle::ferrers;
    RenderFormat format = RenderFormat::ascii;
    /// SVG square edge in pixels; must be >= 4 for SVG output.
    Int cell_size = 20;
    /// Draw the +1/-1 labels of the problem10 style (ASCII uses '+'/'-'
    /// cells either way of showing them; SVG adds text elements). When
    /// false, problem10 cells render unlabelled as '*'.
    bool show_labels = true;
};

/// Renders the diagram of a partition in the ferrers or problem10 style.
/// ASCII output is newline-terminated with no trailing spaces; the empty
/// partition renders as a single comment line containing no cell glyphs.
/// SVG output is a self-contained document with one rect per square (black
/// #000000, white #ffffff, 1px stroke). Throws std::invalid_argument for
/// style castelnuovo or an SVG cell_size < 4.
std::string render_ferrers(const Partition& p, const RenderSpec& spec);

/// Renders the column diagram of a Castelnuovo polynomial; same output
/// conventions. Throws std::invalid_argument unless style is castelnuovo.
std::string render_castelnuovo(const CastelnuovoPoly& s, const RenderSpec& spec);

}  // namespace ferrers
