#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "frieze/annulus.hpp"
#include "frieze/classifier.hpp"
#include "frieze/strip.hpp"

namespace frieze {

struct JsonSchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Triangulation =
    std::variant<AnnulusTriangulation, PuncturedDisc, StripTriangulation, TriangulatedPolygon>;

/// Canonical JSON text: sorted keys, arcs in canonical order, rationals as
/// "p/q" strings, two-space indentation, trailing newline. Byte-stable for
/// equal inputs.
std::string to_json(const AnnulusTriangulation& T);
std::string to_json(const PuncturedDisc& D);
std::string to_json(const StripTriangulation& T);
std::string to_json(const TriangulatedPolygon& P);
std::string to_json(const Triangulation& T);

/// Parses any of the four surfaces; throws JsonSchemaError on malformed data.
Triangulation from_json(const std::string& text);

std::string rational_to_string(const Rat& r);
Rat rational_from_string(const std::string& s);

} // namespace frieze
