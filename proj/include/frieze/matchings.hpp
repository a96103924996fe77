#pragma once

#include <utility>
#include <vector>

#include "frieze/numeric.hpp"
#include "frieze/strip.hpp"

namespace frieze {

/// Vertices i..j of the lower boundary against the triangles meeting them,
/// with the 0/1 incidence table used by the matching counts.
struct MatchingQuery {
    Index i = 0, j = 0;
    std::vector<StripTriangle> triangles;           // exactly triangles_in_range(T, i, j)
    std::vector<std::vector<char>> incidence;       // [vertex - i][triangle]
};

MatchingQuery build_matching_query(const StripTriangulation& T, Index i, Index j);

/// Number of injective assignments of the vertices i..j to pairwise distinct
/// incident triangles. Conventions: j = i-1 counts 1, j = i-2 counts 0.
/// Evaluated exactly as the permanent of the incidence table by a subset
/// sweep over the 2^(j-i+1) vertex sets.
Int count_matchings(const StripTriangulation& T, Index i, Index j);

/// Same number through the recurrence in the quiddity entries, valid only
/// when the triangulation has no peripheral arcs on the lower boundary.
Int count_by_recurrence(const StripTriangulation& T, Index i, Index j);

struct MatchingReport {
    bool pass = true;
    struct Mismatch {
        Index i, j;
        Int matchings;
        Int frieze_entry;
    };
    std::vector<Mismatch> mismatches;
};

/// Checks count_matchings(T, i, j) against the frieze entry of the core
/// quiddity row for all i in [i_lo, i_hi] and 0 <= j - i <= depth.
MatchingReport verify_matching_theorem(const StripTriangulation& T, Index i_lo, Index i_hi,
                                       Index depth, int jobs = 1);

} // namespace frieze
