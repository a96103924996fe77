#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "frieze/classifier.hpp"
#include "frieze/numeric.hpp"

namespace frieze {

enum class Boundary { outer, inner };

/// Marked points are labelled 1..n on the outer boundary and n+1..n+m on the
/// inner boundary.
struct MarkedPoint {
    Boundary boundary;
    Index index;
    auto operator<=>(const MarkedPoint&) const = default;
};

/// Direction an asymptotic arc spirals toward in the cut-open picture. On the
/// outer boundary left means adic and right means Prufer; the inner boundary
/// is oriented the other way around, so the names swap there.
enum class Spiral { left, right };

struct Arc {
    enum class Kind { peripheral, bridging, asymptotic };
    Kind kind;

    // peripheral: endpoints on `boundary`; the arc spans the boundary
    // segments walked from `from` upward (cyclically) to `to`. A loop
    // (from == to) spans the whole complementary boundary circle.
    Boundary boundary = Boundary::outer;
    Index from = 0, to = 0;

    // bridging
    Index outer_point = 0, inner_point = 0;
    long long winding = 0;

    // asymptotic
    MarkedPoint base{Boundary::outer, 0};
    Spiral spiral = Spiral::left;

    static Arc peripheral(Boundary b, Index from, Index to);
    static Arc bridging(Index outer_point, Index inner_point, long long winding);
    static Arc asymptotic(MarkedPoint base, Spiral spiral);

    auto operator<=>(const Arc&) const = default;
};

std::string describe(const Arc& arc);

/// Lift coordinates in the universal cover. Lower lifts of outer point o sit
/// at absolute index o-1 (+ t*n per deck translate), at x = index * m for
/// m > 0 (spacing 1 when m = 0). Upper lifts of inner point p sit at absolute
/// index p-n-1 (+ t*m), at x = index * n. One deck translate shifts lower
/// indices by n and upper indices by m, i.e. x by the fundamental width.
struct CoverLayout {
    Index n = 1, m = 0;

    Index lower_spacing() const { return m > 0 ? m : 1; }
    Index upper_spacing() const { return n; }
    Index width() const { return n * lower_spacing(); }

    Index lower_index(Index outer_label, Index translate) const { return outer_label - 1 + translate * n; }
    Index upper_index(Index inner_label, Index translate) const { return inner_label - n - 1 + translate * m; }
    Index lower_x(Index outer_label, Index translate) const { return lower_index(outer_label, translate) * lower_spacing(); }
    Index upper_x(Index inner_label, Index translate) const { return upper_index(inner_label, translate) * upper_spacing(); }

    MarkedPoint project_lower_index(Index abs) const;
    MarkedPoint project_upper_index(Index abs) const;
};

struct AnnulusTriangulation {
    Index n = 1;
    Index m = 0;
    std::vector<Arc> arcs;
    long long winding_bound = 2;

    CoverLayout cover() const { return CoverLayout{n, m}; }
};

struct ValidityReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/// Pairwise compatibility on lifts, arc count n+m, winding bounds, span and
/// label sanity, one spiral direction. A passing report certifies an actual
/// triangulation: a compatible set of exactly n+m arcs is always maximal.
ValidityReport check_triangulation(const AnnulusTriangulation& T);

/// a_i = 1 + number of lifted arc ends at one fixed lift of outer point i.
std::vector<long long> outer_quiddity(const AnnulusTriangulation& T);

/// Number of bridging arcs incident with outer point i.
long long bridging_degree(const AnnulusTriangulation& T, Index i);

/// Triangulation of A_{n, m_min} whose outer quiddity equals `entries`,
/// for sequences that classify infinite. Built from the reduction base
/// (adic circle, bridging fan, or the loop pictures) and replayed through
/// the trace: reductions insert an outer vertex with the peripheral arc over
/// it, normalizations repeat the fundamental domain.
AnnulusTriangulation realize(const std::vector<long long>& entries);

/// s-fold horizontal repetition of a fundamental domain, over A_{sn,sm}.
AnnulusTriangulation multiply_period(const AnnulusTriangulation& T, Index s);

/// Keeps outer peripheral arcs and replaces the bridging fan at each outer
/// point that has one by a single adic arc; inner-boundary arcs are dropped.
/// The result lives over A_{n,0}.
AnnulusTriangulation asymptotic_reduction(const AnnulusTriangulation& T);

/// Valid triangulation whose outer quiddity is the input's with +1 at j.
AnnulusTriangulation bump_realization(const AnnulusTriangulation& T, Index j);

struct DiscArc {
    enum class Kind { peripheral, central };
    Kind kind;
    Index from = 0, to = 0; // peripheral span, same convention as annulus arcs
    Index at = 0;           // central endpoint on the boundary
    auto operator<=>(const DiscArc&) const = default;
};

struct PuncturedDisc {
    Index n = 1;
    std::vector<DiscArc> arcs;
};

ValidityReport check_disc(const PuncturedDisc& D);
std::vector<long long> disc_quiddity(const PuncturedDisc& D);

/// Central arcs become adic arcs based at the same point; peripheral arcs
/// are kept. Quiddity is preserved.
AnnulusTriangulation disc_to_annulus(const PuncturedDisc& D);

/// Inverse direction; requires m = 0 and no bridging arcs.
PuncturedDisc annulus0_to_disc(const AnnulusTriangulation& T);

} // namespace frieze
