#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/frieze_core.hpp"
#include "frieze/numeric.hpp"

namespace frieze {

/// One event of the reduction run. A reduce step removes the entry 1 at
/// `index` (0-based, smallest index holding a 1) and decrements its two
/// cyclic neighbours. A normalize step cuts the sequence to its shortest
/// period, recording the multiplicity that was folded away.
struct ReductionStep {
    enum class Kind { reduce, normalize };
    Kind kind;
    std::vector<long long> before;
    Index index = 0;      // reduce: removed position
    Index factor = 1;     // normalize: length ratio before/after
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<long long> base;
};

struct TriangulatedPolygon {
    Index n = 0;
    // Chords (u, v) with 1 <= u < v <= n, pairwise non-crossing, n - 3 of them.
    std::vector<std::pair<Index, Index>> diagonals;

    /// Triangles incident with each vertex; for a polygon triangulation this
    /// is one plus the number of diagonals at the vertex.
    std::vector<long long> quiddity() const;
};

enum class Outcome { finite, infinite, not_a_frieze };

struct Classification {
    Outcome outcome;
    Index shortest_period = 1;
    ReductionTrace trace;

    // finite only
    Index polygon_order = 0;
    std::optional<TriangulatedPolygon> witness;

    // infinite only
    Index minimal_inner_points = 0;

    // not_a_frieze only: a position where the fragment goes nonpositive
    std::pair<Index, Index> rejection_witness{0, 0};
};

/// Decides finite / infinite / not-a-frieze for the periodic row generated by
/// the cyclic tuple, with the full reduction history. Finite outcomes carry
/// the polygon order and a witness triangulation.
Classification classify(const std::vector<long long>& entries);

/// Remark-style minimum number of inner marked points needed to realize an
/// infinite sequence in an annulus. Throws unless classify() is infinite.
Index minimal_inner_points(const std::vector<long long>& entries);

/// Smallest N >= 3 such that the rows at depth N-3 and N-2 are all ones and
/// all zeros; requires a finite classification.
Index polygon_order(const std::vector<long long>& entries);

/// Triangulated N-gon whose vertex quiddity is the input expanded to length
/// N, built by ear reduction on the full N-tuple and replay in reverse.
TriangulatedPolygon realize_polygon(const std::vector<long long>& entries);

} // namespace frieze
