#include "ferrers/render.hpp"

#include <algorithm>
#include <sstream>

namespace ferrers {

namespace {

constexpr const char* kEmptyAscii = "(empty diagram)\n";

void check_svg_spec(const RenderSpec& spec) {
    if (spec.format == RenderFormat::svg && spec.cell_size < 4)
        throw std::invalid_argument("SVG cell size must be >= 4 pixels");
}

std::string svg_open(Int cols, Int rows, Int cell) {
    // One pixel of padding on every side so cell strokes are not clipped.
    Int width = cols * cell + 2;
    Int height = rows * cell + 2;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"-1 -1 " << width << ' ' << height << "\">\n";
    return out.str();
}

void svg_rect(std::ostringstream& out, Int x, Int y, Int cell, bool black) {
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"" << (black ? "#000000" : "#ffffff") << "\" stroke=\"#000000\""
        << " stroke-width=\"1\"/>\n";
}

std::string empty_svg() {
    std::ostringstream out;
    out << svg_open(0, 0, 1) << "<!-- empty diagram -->\n</svg>\n";
    return out.str();
}

std::string ferrers_ascii(const Partition& p) {
    if (p.empty()) return kEmptyAscii;
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        Int row = static_cast<Int>(i);
        for (Int col = 0; col < p.parts()[i]; ++col)
            out += is_black({row, col}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string ferrers_svg(const Partition& p, Int cell) {
    if (p.empty()) return empty_svg();
    Int rows = static_cast<Int>(p.size());
    std::ostringstream out;
    out << svg_open(p.parts()[0], rows, cell);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int row = static_cast<Int>(i);
        Int y = (rows - 1 - row) * cell;  // row 0 sits at the bottom
        for (Int col = 0; col < p.parts()[i]; ++col)
            svg_rect(out, col * cell, y, cell, is_black({row, col}));
    }
    out << "</svg>\n";
    return out.str();
}

std::string problem10_ascii(const Partition& p, bool labels) {
    if (p.empty()) return kEmptyAscii;
    std::string out;
    // Top-justified: the first part is the top row; '+' in the top-left.
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (Int col = 0; col < p.parts()[i]; ++col) {
            if (!labels)
                out += '*';
            else
                out += (static_cast<Int>(i) + col) % 2 == 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

std::string problem10_svg(const Partition& p, Int cell, bool labels) {
    if (p.empty()) return empty_svg();
    Int rows = static_cast<Int>(p.size());
    std::ostringstream out;
    out << svg_open(p.parts()[0], rows, cell);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int y = static_cast<Int>(i) * cell;
        for (Int col = 0; col < p.parts()[i]; ++col)
            svg_rect(out, col * cell, y, cell, false);
    }
    if (labels) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (Int col = 0; col < p.parts()[i]; ++col) {
                bool plus = (static_cast<Int>(i) + col) % 2 == 0;
                out << "<text x=\"" << col * cell + cell / 2 << "\" y=\""
                    << static_cast<Int>(i) * cell + (cell * 7) / 10
                    << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\""
                    << cell / 2 << "\">" << (plus ? "+1" : "-1") << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string castelnuovo_ascii(const CastelnuovoPoly& s) {
    if (s.is_zero()) return kEmptyAscii;
    const auto& coeffs = s.coeffs();
    Int height = *std::max_element(coeffs.begin(), coeffs.end());
    std::string out;
    // Columns stand on the baseline; print level by level from the top.
    for (Int level = height - 1; level >= 0; --level) {
        std::size_t last = 0;
        for (std::size_t m = 0; m < coeffs.size(); ++m)
            if (coeffs[m] > level) last = m;
        std::string line;
        for (std::size_t m = 0; m <= last; ++m) {
            if (coeffs[m] > level)
                line += m % 2 == 0 ? '#' : '.';
            else
                line += ' ';
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string castelnuovo_svg(const CastelnuovoPoly& s, Int cell) {
    if (s.is_zero()) return empty_svg();
    const auto& coeffs = s.coeffs();
    Int height = *std::max_element(coeffs.begin(), coeffs.end());
    std::ostringstream out;
    out << svg_open(static_cast<Int>(coeffs.size()), height, cell);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        for (Int j = 0; j < coeffs[m]; ++j) {
            Int y = (height - 1 - j) * cell;  // cells stack up from the baseline
            svg_rect(out, static_cast<Int>(m) * cell, y, cell, m % 2 == 0);
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_ferrers(const Partition& p, const RenderSpec& spec) {
    check_svg_spec(spec);
    switch (spec.style) {
        case DiagramStyle::ferrers:
            return spec.format == RenderFormat::ascii ? ferrers_ascii(p)
                                                      : ferrers_svg(p, spec.cell_size);
        case DiagramStyle::problem10:
            return spec.format == RenderFormat::ascii
                       ? problem10_ascii(p, spec.show_labels)
                       : problem10_svg(p, spec.cell_size, spec.show_labels);
        case DiagramStyle::castelnuovo:
            throw std::invalid_argument(
                "the castelnuovo style renders a polynomial, not a partition");
    }
    throw std::logic_error("unreachable diagram style");
}

std::string render_castelnuovo(const CastelnuovoPoly& s, const RenderSpec& spec) {
    check_svg_spec(spec);
    if (spec.style != DiagramStyle::castelnuovo)
        throw std::invalid_argument("render_castelnuovo requires the castelnuovo style");
    return spec.format == RenderFormat::ascii ? castelnuovo_ascii(s)
                                              : castelnuovo_svg(s, spec.cell_size);
}

}  // namespace ferrers
