#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "frieze/annulus.hpp"
#include "frieze/numeric.hpp"
#include "frieze/quiddity.hpp"

namespace frieze {

/// Vertex of a strip triangulation: lower vertices are integer x-positions,
/// upper vertices are indices into the sorted rational position list.
struct StripVertex {
    bool upper = false;
    Index v = 0;
    auto operator<=>(const StripVertex&) const = default;
};

/// Windowed triangulation of the infinite strip. The stored range carries
/// every arc needed to answer face queries inside the core window exactly;
/// the strip is simply connected, so bridging arcs carry no winding.
struct StripTriangulation {
    Index stored_lo = 0, stored_hi = 0;
    Index core_lo = 0, core_hi = 0;
    Index spill = 0; // how far peeling reached into the 2-padding

    std::vector<Rat> upper; // x-positions, strictly increasing

    struct LowerArch {
        Index from = 0, to = 0; // from < to
        auto operator<=>(const LowerArch&) const = default;
    };
    struct UpperArch {
        Index from = 0, to = 0; // indices into upper, from < to
        auto operator<=>(const UpperArch&) const = default;
    };
    struct Bridge {
        Index lower = 0;
        Index upper = 0; // index into upper
        auto operator<=>(const Bridge&) const = default;
    };
    std::vector<LowerArch> lower_arches;
    std::vector<UpperArch> upper_arches;
    std::vector<Bridge> bridges;

    bool in_core(Index i) const { return i >= core_lo && i <= core_hi; }
};

struct StripError : std::runtime_error {
    enum class Kind { adjacent_ones, nonpositive_entry, round_limit };
    Kind kind;
    Index position;
    StripError(Kind k, Index pos, const std::string& msg)
        : std::runtime_error(msg), kind(k), position(pos) {}
};

/// Realizes a 2-padded window as a strip triangulation: peel every 1 with a
/// peripheral arc over it until none remain, then complete with a bridging
/// fan (fresh upper vertices above entries > 2, one extra arc per survivor).
StripTriangulation realize_strip(const QuiddityRow& window, Index round_cap = -1);

struct StripTriangle {
    std::array<StripVertex, 3> corners;
    bool touches_lower(Index i) const {
        for (const StripVertex& c : corners)
            if (!c.upper && c.v == i) return true;
        return false;
    }
    auto operator<=>(const StripTriangle&) const = default;
};

/// All triangle faces of the stored window, via the rotation system of the
/// planar arc graph.
std::vector<StripTriangle> strip_faces(const StripTriangulation& T);

/// Triangle-incidence counts for lower vertices lo..hi (must be in core).
std::vector<long long> strip_quiddity(const StripTriangulation& T, Index lo, Index hi);

/// Faces meeting a lower vertex in {i..j}, each listed once.
std::vector<StripTriangle> triangles_in_range(const StripTriangulation& T, Index i, Index j);

/// Pairwise non-crossing arcs plus every interior face a triangle.
ValidityReport check_strip(const StripTriangulation& T);

/// The quiddity row of the core window as a 2-padded QuiddityRow. Entries
/// outside the core are not meaningful for non-padded sources; recurrence
/// sweeps must stay inside the core.
QuiddityRow core_row(const StripTriangulation& T);

/// Unrolls an annulus triangulation to `domains` fundamental domains on each
/// side of the central copy. Asymptotic arcs are replaced by bridging arcs
/// into one far-side upper vertex, which preserves all triangles incident
/// with stored lower vertices; inner-boundary arcs of asymptotic
/// triangulations are dropped (they never touch the lower boundary).
StripTriangulation unroll_to_strip(const AnnulusTriangulation& T, Index domains = 3);

} // namespace frieze
