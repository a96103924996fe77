#pragma once

#include <string>

#include "frieze/json_io.hpp"

namespace frieze {

/// Cut-open picture of a triangulation as SVG 1.1: two boundary lines,
/// dashed identification verticals for periodic surfaces, one path per arc,
/// and point labels. Output bytes depend only on the input.
std::string render_svg(const Triangulation& T);

} // namespace frieze
