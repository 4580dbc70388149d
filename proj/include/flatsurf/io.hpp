#pragma once

#include "flatsurf/flatcore.hpp"
#include "flatsurf/origami.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatsurf {

/// Input error with a 1-based position (0 when the position is not known).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// {"polygons": [[[x, y], ...], ...], "pairings": [[[p, e], [q, f]], ...]}.
/// Coordinates are integers or reduced "p/q" strings. Every edge must be paired
/// exactly once. Clockwise polygons are reversed (normalize_orientation).
Surface parse_surface_json(std::string_view text);
std::string surface_to_json(const Surface& s);

/// "d: <n>", "h: <cycles>", "v: <cycles>" with 1-based labels.
Origami parse_origami_text(std::string_view text);
std::string origami_to_text(const Origami& o);

/// Polygons with glued edges in matching colors and cone points marked.
/// Coordinates are converted to floating point for drawing only.
std::string render_svg(const Surface& s);

}  // namespace flatsurf
