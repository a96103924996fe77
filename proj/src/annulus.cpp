#include "frieze/annulus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long floormod(long long a, long long b) { return a - floordiv(a, b) * b; }

// Is there an integer strictly between a1/b1 and a2/b2 (b1, b2 > 0)?
bool integer_strictly_between(long long a1, long long b1, long long a2, long long b2) {
    if (a1 * b2 > a2 * b1) {
        std::swap(a1, a2);
        std::swap(b1, b2);
    }
    long long lo = floordiv(a1, b1) + 1; // smallest integer > a1/b1
    long long hi = (floormod(a2, b2) == 0) ? a2 / b2 - 1 : floordiv(a2, b2); // largest < a2/b2
    return lo <= hi;
}

// Crossing of two bridging lifts (L1,U1), (L2+tn, U2+tm): the sign product is
// negative exactly for t strictly between (L1-L2)/n and (U1-U2)/m.
bool cross_bridge_bridge(long long L1, long long U1, long long L2, long long U2, Index n, Index m) {
    return integer_strictly_between(L1 - L2, n, U1 - U2, m);
}

// Bridging endpoint at absolute index P (spacing s) strictly inside some
// translate of the arch interval [A, B].
bool point_inside_arch(long long P, long long A, long long B, Index s) {
    return integer_strictly_between(P - B, s, P - A, s);
}

bool cross_arch_arch(long long A1, long long B1, long long A2, long long B2, Index s) {
    long long t_lo = floordiv(A1 - B2, s) - 1;
    long long t_hi = floordiv(B1 - A2, s) + 1;
    for (long long t = t_lo; t <= t_hi; ++t) {
        long long a2 = A2 + t * s, b2 = B2 + t * s;
        if ((A1 < a2 && a2 < B1 && B1 < b2) || (a2 < A1 && A1 < b2 && b2 < B1)) return true;
    }
    return false;
}

// Working form of one arc as a lift anchored near translate zero.
struct LiftArc {
    enum class Kind { low_arch, up_arch, bridge };
    Kind kind;
    long long a = 0; // low_arch/up_arch: interval start; bridge: lower index
    long long b = 0; // low_arch/up_arch: interval end; bridge: upper index
};

Index span_length(const Arc& arc, Index circumference) {
    if (arc.from == arc.to) return circumference;
    return floormod(arc.to - arc.from, circumference);
}

LiftArc to_lift(const Arc& arc, const AnnulusTriangulation& T) {
    LiftArc lift;
    switch (arc.kind) {
    case Arc::Kind::peripheral:
        if (arc.boundary == Boundary::outer) {
            lift.kind = LiftArc::Kind::low_arch;
            lift.a = arc.from - 1;
            lift.b = lift.a + span_length(arc, T.n);
        } else {
            lift.kind = LiftArc::Kind::up_arch;
            lift.a = arc.from - T.n - 1;
            lift.b = lift.a + span_length(arc, T.m);
        }
        break;
    case Arc::Kind::bridging:
        lift.kind = LiftArc::Kind::bridge;
        lift.a = arc.outer_point - 1;
        lift.b = (arc.inner_point - T.n - 1) + arc.winding * T.m;
        break;
    case Arc::Kind::asymptotic:
        throw std::logic_error("asymptotic arcs have no finite lift");
    }
    return lift;
}

std::vector<LiftArc> to_lifts(const AnnulusTriangulation& T) {
    std::vector<LiftArc> lifts;
    lifts.reserve(T.arcs.size());
    for (const Arc& arc : T.arcs) lifts.push_back(to_lift(arc, T));
    return lifts;
}

AnnulusTriangulation from_lifts(Index n, Index m, const std::vector<LiftArc>& lifts,
                                long long winding_bound = 2) {
    AnnulusTriangulation T;
    T.n = n;
    T.m = m;
    T.winding_bound = winding_bound;
    std::vector<Arc> bridges;
    long long wmin = 0, wmax = 0;
    bool have_bridge = false;
    for (const LiftArc& lift : lifts) {
        switch (lift.kind) {
        case LiftArc::Kind::low_arch: {
            long long a = floormod(lift.a, n);
            long long len = lift.b - lift.a;
            T.arcs.push_back(Arc::peripheral(Boundary::outer, a + 1, floormod(a + len, n) + 1));
            break;
        }
        case LiftArc::Kind::up_arch: {
            long long a = floormod(lift.a, m);
            long long len = lift.b - lift.a;
            T.arcs.push_back(Arc::peripheral(Boundary::inner, n + a + 1, n + floormod(a + len, m) + 1));
            break;
        }
        case LiftArc::Kind::bridge: {
            long long t = floordiv(lift.a, n);
            long long L = lift.a - t * n;
            long long U = lift.b - t * m;
            long long w = floordiv(U, m);
            Arc arc = Arc::bridging(L + 1, n + floormod(U, m) + 1, w);
            if (!have_bridge) {
                wmin = wmax = w;
                have_bridge = true;
            } else {
                wmin = std::min(wmin, w);
                wmax = std::max(wmax, w);
            }
            bridges.push_back(arc);
            break;
        }
        }
    }
    // Simultaneously unwinding all bridging arcs is a twist of the inner
    // boundary; use it to keep windings centered.
    long long twist = have_bridge ? -floordiv(wmin + wmax, 2) : 0;
    for (Arc& arc : bridges) {
        arc.winding += twist;
        T.arcs.push_back(arc);
    }
    std::sort(T.arcs.begin(), T.arcs.end());
    return T;
}

long long asym_base_index(const Arc& arc, const AnnulusTriangulation& T) {
    return arc.base.boundary == Boundary::outer ? arc.base.index - 1 : arc.base.index - T.n - 1;
}

Index boundary_count(const AnnulusTriangulation& T, Boundary b) {
    return b == Boundary::outer ? T.n : T.m;
}

bool compatible(const Arc& x, const Arc& y, const AnnulusTriangulation& T, std::string* why) {
    auto explain = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    const Index n = T.n, m = T.m;
    using K = Arc::Kind;
    if (x.kind == K::asymptotic || y.kind == K::asymptotic) {
        const Arc& a = x.kind == K::asymptotic ? x : y;
        const Arc& o = x.kind == K::asymptotic ? y : x;
        switch (o.kind) {
        case K::bridging:
            return explain("bridging and asymptotic arcs are never compatible");
        case K::asymptotic:
            if (a.spiral != o.spiral) return explain("asymptotic arcs spiral in opposite directions");
            return true;
        case K::peripheral: {
            if (o.boundary != a.base.boundary) return true;
            LiftArc arch = to_lift(o, T);
            Index s = boundary_count(T, o.boundary);
            if (point_inside_arch(asym_base_index(a, T), arch.a, arch.b, s))
                return explain("asymptotic base lies under the peripheral arc");
            return true;
        }
        }
    }
    LiftArc lx = to_lift(x, T);
    LiftArc ly = to_lift(y, T);
    if (lx.kind == LiftArc::Kind::bridge && ly.kind == LiftArc::Kind::bridge) {
        if (cross_bridge_bridge(lx.a, lx.b, ly.a, ly.b, n, m))
            return explain("bridging lifts interleave");
        return true;
    }
    if (lx.kind == LiftArc::Kind::bridge || ly.kind == LiftArc::Kind::bridge) {
        const LiftArc& br = lx.kind == LiftArc::Kind::bridge ? lx : ly;
        const LiftArc& ar = lx.kind == LiftArc::Kind::bridge ? ly : lx;
        bool lower = ar.kind == LiftArc::Kind::low_arch;
        long long P = lower ? br.a : br.b;
        Index s = lower ? n : m;
        if (point_inside_arch(P, ar.a, ar.b, s))
            return explain("bridging endpoint lies strictly under the peripheral arc");
        return true;
    }
    if (lx.kind != ly.kind) return true; // arches on opposite boundaries
    Index s = lx.kind == LiftArc::Kind::low_arch ? n : m;
    if (cross_arch_arch(lx.a, lx.b, ly.a, ly.b, s))
        return explain("peripheral spans strictly interleave");
    return true;
}

} // namespace

Arc Arc::peripheral(Boundary b, Index from, Index to) {
    Arc arc;
    arc.kind = Kind::peripheral;
    arc.boundary = b;
    arc.from = from;
    arc.to = to;
    return arc;
}

Arc Arc::bridging(Index outer_point, Index inner_point, long long winding) {
    Arc arc;
    arc.kind = Kind::bridging;
    arc.outer_point = outer_point;
    arc.inner_point = inner_point;
    arc.winding = winding;
    return arc;
}

Arc Arc::asymptotic(MarkedPoint base, Spiral spiral) {
    Arc arc;
    arc.kind = Kind::asymptotic;
    arc.base = base;
    arc.spiral = spiral;
    return arc;
}

std::string describe(const Arc& arc) {
    std::ostringstream out;
    switch (arc.kind) {
    case Arc::Kind::peripheral:
        out << "peripheral[" << arc.from << "," << arc.to << "]";
        break;
    case Arc::Kind::bridging:
        out << "bridging[" << arc.outer_point << "," << arc.inner_point << "]w" << arc.winding;
        break;
    case Arc::Kind::asymptotic:
        out << (arc.spiral == Spiral::left ? "left" : "right") << "-asymptotic@" << arc.base.index;
        break;
    }
    return out.str();
}

MarkedPoint CoverLayout::project_lower_index(Index abs) const {
    return MarkedPoint{Boundary::outer, floormod(abs, n) + 1};
}

MarkedPoint CoverLayout::project_upper_index(Index abs) const {
    return MarkedPoint{Boundary::inner, n + floormod(abs, m) + 1};
}

ValidityReport check_triangulation(const AnnulusTriangulation& T) {
    ValidityReport rep;
    if (T.n < 1) rep.fail("n must be at least 1");
    if (T.m < 0) rep.fail("m must be nonnegative");
    if (!rep.ok) return rep;

    std::optional<Spiral> spiral_seen;
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral: {
            Index c = boundary_count(T, arc.boundary);
            Index lo = arc.boundary == Boundary::outer ? 1 : T.n + 1;
            if (arc.from < lo || arc.from >= lo + c || arc.to < lo || arc.to >= lo + c)
                rep.fail(describe(arc) + ": endpoint out of range");
            else if (span_length(arc, c) < 2)
                rep.fail(describe(arc) + ": span shorter than two boundary segments");
            break;
        }
        case Arc::Kind::bridging:
            if (arc.outer_point < 1 || arc.outer_point > T.n)
                rep.fail(describe(arc) + ": outer endpoint out of range");
            if (arc.inner_point <= T.n || arc.inner_point > T.n + T.m)
                rep.fail(describe(arc) + ": inner endpoint out of range");
            if (std::abs(arc.winding) > T.winding_bound)
                rep.fail(describe(arc) + ": winding exceeds bound " + std::to_string(T.winding_bound));
            break;
        case Arc::Kind::asymptotic: {
            Index c = boundary_count(T, arc.base.boundary);
            Index lo = arc.base.boundary == Boundary::outer ? 1 : T.n + 1;
            if (arc.base.index < lo || arc.base.index >= lo + c)
                rep.fail(describe(arc) + ": base out of range");
            if (spiral_seen && *spiral_seen != arc.spiral)
                rep.fail("asymptotic arcs do not all spiral the same way");
            spiral_seen = arc.spiral;
            break;
        }
        }
    }
    if (!rep.ok) return rep;

    for (std::size_t i = 0; i < T.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < T.arcs.size(); ++j) {
            if (T.arcs[i] == T.arcs[j]) {
                rep.fail("duplicate arc " + describe(T.arcs[i]));
                continue;
            }
            std::string why;
            if (!compatible(T.arcs[i], T.arcs[j], T, &why))
                rep.fail(describe(T.arcs[i]) + " vs " + describe(T.arcs[j]) + ": " + why);
        }

    if (static_cast<Index>(T.arcs.size()) != T.n + T.m)
        rep.fail("arc count " + std::to_string(T.arcs.size()) + " != n+m = " + std::to_string(T.n + T.m));
    return rep;
}

std::vector<long long> outer_quiddity(const AnnulusTriangulation& T) {
    std::vector<long long> q(static_cast<std::size_t>(T.n), 1);
    auto bump_at = [&](Index i) { q[static_cast<std::size_t>(i - 1)] += 1; };
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral:
            if (arc.boundary == Boundary::outer) {
                bump_at(arc.from);
                bump_at(arc.to);
            }
            break;
        case Arc::Kind::bridging:
            bump_at(arc.outer_point);
            break;
        case Arc::Kind::asymptotic:
            if (arc.base.boundary == Boundary::outer) bump_at(arc.base.index);
            break;
        }
    }
    return q;
}

long long bridging_degree(const AnnulusTriangulation& T, Index i) {
    long long deg = 0;
    for (const Arc& arc : T.arcs)
        if (arc.kind == Arc::Kind::bridging && arc.outer_point == i) ++deg;
    return deg;
}

AnnulusTriangulation multiply_period(const AnnulusTriangulation& T, Index s) {
    if (s < 1) throw std::invalid_argument("multiply_period needs s >= 1");
    if (s == 1) return T;
    AnnulusTriangulation R;
    R.n = s * T.n;
    R.m = s * T.m;
    R.winding_bound = T.winding_bound;
    const Index n = T.n, m = T.m;
    for (const Arc& arc : T.arcs) {
        for (Index c = 0; c < s; ++c) {
            switch (arc.kind) {
            case Arc::Kind::peripheral: {
                if (arc.boundary == Boundary::outer) {
                    long long a = (arc.from - 1) + c * n;
                    long long len = span_length(arc, n);
                    R.arcs.push_back(Arc::peripheral(Boundary::outer, floormod(a, R.n) + 1,
                                                     floormod(a + len, R.n) + 1));
                } else {
                    long long a = (arc.from - T.n - 1) + c * m;
                    long long len = span_length(arc, m);
                    R.arcs.push_back(Arc::peripheral(Boundary::inner, R.n + floormod(a, R.m) + 1,
                                                     R.n + floormod(a + len, R.m) + 1));
                }
                break;
            }
            case Arc::Kind::bridging: {
                long long upper = (arc.inner_point - T.n - 1) + (arc.winding + c) * m;
                long long w = floordiv(upper, R.m);
                R.arcs.push_back(Arc::bridging(arc.outer_point + c * n,
                                               R.n + floormod(upper, R.m) + 1, w));
                break;
            }
            case Arc::Kind::asymptotic: {
                MarkedPoint base = arc.base;
                if (base.boundary == Boundary::outer)
                    base.index += c * n;
                else
                    base.index = R.n + (base.index - T.n - 1) + c * m + 1;
                R.arcs.push_back(Arc::asymptotic(base, arc.spiral));
                break;
            }
            }
        }
    }
    std::sort(R.arcs.begin(), R.arcs.end());
    return R;
}

namespace {

// Inserts a new outer vertex at row position k (0-based) of a length-(n+1)
// row and adds the peripheral arc spanning it. Inverse of one reduction step.
AnnulusTriangulation insert_outer_vertex(const AnnulusTriangulation& T, Index k) {
    const Index n = T.n;
    AnnulusTriangulation R;
    R.n = n + 1;
    R.m = T.m;
    R.winding_bound = T.winding_bound;
    // new absolute position of an old lower index
    auto g = [&](long long p) {
        long long q = floordiv(p, n), r = p - q * n;
        return q * (n + 1) + (r < k ? r : r + 1);
    };
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral: {
            if (arc.boundary == Boundary::inner) {
                R.arcs.push_back(Arc::peripheral(Boundary::inner, arc.from + 1, arc.to + 1));
                break;
            }
            long long a = arc.from - 1;
            long long b = a + span_length(arc, n);
            // the insertion slot sits between old positions k-1 and k
            long long slots = floordiv(b - k, n) - floordiv(a - k, n);
            long long na = g(a);
            long long nb = na + (b - a) + slots;
            R.arcs.push_back(Arc::peripheral(Boundary::outer, floormod(na, R.n) + 1,
                                             floormod(nb, R.n) + 1));
            break;
        }
        case Arc::Kind::bridging: {
            long long L = g(arc.outer_point - 1);
            R.arcs.push_back(Arc::bridging(floormod(L, R.n) + 1, arc.inner_point + 1, arc.winding));
            break;
        }
        case Arc::Kind::asymptotic: {
            MarkedPoint base = arc.base;
            if (base.boundary == Boundary::outer)
                base.index = floormod(g(base.index - 1), R.n) + 1;
            else
                base.index += 1;
            R.arcs.push_back(Arc::asymptotic(base, arc.spiral));
            break;
        }
        }
    }
    Index len = n + 1;
    Index u = floormod(k - 1, len) + 1;
    Index w = floormod(k + 1, len) + 1;
    R.arcs.push_back(Arc::peripheral(Boundary::outer, u, w));
    std::sort(R.arcs.begin(), R.arcs.end());
    return R;
}

AnnulusTriangulation base_all_two(Index r) {
    AnnulusTriangulation T;
    T.n = r;
    T.m = 0;
    for (Index i = 1; i <= r; ++i)
        T.arcs.push_back(Arc::asymptotic(MarkedPoint{Boundary::outer, i}, Spiral::left));
    return T;
}

// Bridging fan for an all->=2 base with some entry above 2: d_i = b_i - 2
// fresh inner points above each outer point, then one completion arc per
// outer point to the first inner point of the next fan.
AnnulusTriangulation base_fan(const std::vector<long long>& base) {
    const Index r = static_cast<Index>(base.size());
    Index m = 0;
    for (long long b : base) m += b - 2;
    AnnulusTriangulation T;
    T.n = r;
    T.m = m;
    Index prefix = 0;
    for (Index i = 1; i <= r; ++i) {
        const Index d = base[static_cast<std::size_t>(i - 1)] - 2;
        for (Index c = 0; c < d; ++c)
            T.arcs.push_back(Arc::bridging(i, r + prefix + c + 1, 0));
        const Index completion = prefix + d;
        T.arcs.push_back(Arc::bridging(i, r + floormod(completion, m) + 1, completion / m));
        prefix += d;
    }
    std::sort(T.arcs.begin(), T.arcs.end());
    return T;
}

// Loop picture for a base (1, a) or (a, 1) with a >= 4.
AnnulusTriangulation base_one_a(const std::vector<long long>& base) {
    const Index pos_a = base[0] == 1 ? 2 : 1; // 1-based position of the large entry
    const long long a = std::max(base[0], base[1]);
    AnnulusTriangulation T;
    T.n = 2;
    T.m = a - 4;
    T.arcs.push_back(Arc::peripheral(Boundary::outer, pos_a, pos_a));
    if (a == 4) {
        T.arcs.push_back(Arc::asymptotic(MarkedPoint{Boundary::outer, pos_a}, Spiral::left));
    } else {
        for (Index c = 0; c < T.m; ++c)
            T.arcs.push_back(Arc::bridging(pos_a, 2 + c + 1, 0));
        T.arcs.push_back(Arc::bridging(pos_a, 3, 1));
    }
    std::sort(T.arcs.begin(), T.arcs.end());
    return T;
}

} // namespace

AnnulusTriangulation realize(const std::vector<long long>& entries) {
    Classification cls = classify(entries);
    if (cls.outcome != Outcome::infinite)
        throw std::invalid_argument("realize needs an infinite classification");

    const std::vector<long long>& base = cls.trace.base;
    AnnulusTriangulation T;
    if (std::all_of(base.begin(), base.end(), [](long long b) { return b == 2; }))
        T = base_all_two(static_cast<Index>(base.size()));
    else if (base.size() == 2 && (base[0] == 1 || base[1] == 1))
        T = base_one_a(base);
    else
        T = base_fan(base);

    for (auto it = cls.trace.steps.rbegin(); it != cls.trace.steps.rend(); ++it) {
        if (it->kind == ReductionStep::Kind::reduce)
            T = insert_outer_vertex(T, it->index);
        else
            T = multiply_period(T, it->factor);
    }

    if (outer_quiddity(T) != entries)
        throw std::logic_error("realization does not reproduce the input quiddity");
    ValidityReport rep = check_triangulation(T);
    if (!rep.ok) throw std::logic_error("realization is not a valid triangulation: " + rep.failures.front());
    return T;
}

AnnulusTriangulation asymptotic_reduction(const AnnulusTriangulation& T) {
    AnnulusTriangulation R;
    R.n = T.n;
    R.m = 0;
    R.winding_bound = T.winding_bound;
    std::set<Index> bridged;
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral:
            if (arc.boundary == Boundary::outer) R.arcs.push_back(arc);
            break;
        case Arc::Kind::bridging:
            bridged.insert(arc.outer_point);
            break;
        case Arc::Kind::asymptotic:
            if (arc.base.boundary == Boundary::outer) R.arcs.push_back(arc);
            break;
        }
    }
    for (Index i : bridged)
        R.arcs.push_back(Arc::asymptotic(MarkedPoint{Boundary::outer, i}, Spiral::left));
    std::sort(R.arcs.begin(), R.arcs.end());
    ValidityReport rep = check_triangulation(R);
    if (!rep.ok)
        throw std::logic_error("asymptotic reduction failed: " + rep.failures.front());
    return R;
}

namespace {

bool has_asymptotic(const AnnulusTriangulation& T) {
    return std::any_of(T.arcs.begin(), T.arcs.end(),
                       [](const Arc& a) { return a.kind == Arc::Kind::asymptotic; });
}

// Bump case for an asymptotic arc at j: arcs based at the inner boundary are
// dropped (they do not affect the outer quiddity), the remaining asymptotic
// picture over A_{n,0} is replaced by a bridging fan into one new inner
// point, and the two fundamental-domain lifts of j both reach it.
AnnulusTriangulation bump_asymptotic_at(const AnnulusTriangulation& T, Index j) {
    AnnulusTriangulation R;
    R.n = T.n;
    R.m = 1;
    R.winding_bound = T.winding_bound;
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral:
            if (arc.boundary == Boundary::outer) R.arcs.push_back(arc);
            break;
        case Arc::Kind::asymptotic:
            if (arc.base.boundary == Boundary::outer)
                R.arcs.push_back(Arc::bridging(arc.base.index, T.n + 1,
                                               arc.base.index >= j ? 1 : 0));
            break;
        case Arc::Kind::bridging:
            throw std::logic_error("asymptotic triangulation cannot contain bridging arcs");
        }
    }
    R.arcs.push_back(Arc::bridging(j, T.n + 1, 0));
    std::sort(R.arcs.begin(), R.arcs.end());
    return R;
}

struct LiftWorkspace {
    Index n, m;
    std::vector<LiftArc> lifts;

    // (lift index, upper index when the lower end is anchored at L)
    std::vector<std::pair<std::size_t, long long>> bridges_at_lower(long long L) const {
        std::vector<std::pair<std::size_t, long long>> out;
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            const LiftArc& la = lifts[i];
            if (la.kind != LiftArc::Kind::bridge) continue;
            if (floormod(L - la.a, n) != 0) continue;
            long long t = (L - la.a) / n;
            out.emplace_back(i, la.b + t * m);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });
        return out;
    }

    bool up_edge_exists(long long a, long long b) const {
        if (b == a + 1) return true;
        for (const LiftArc& la : lifts) {
            if (la.kind != LiftArc::Kind::up_arch) continue;
            if (la.b - la.a != b - a) continue;
            if (floormod(a - la.a, m) == 0) return true;
        }
        return false;
    }
};

// Remap of absolute upper indices after inserting `count` new inner points
// into the boundary slot immediately left of `anchor`, repeated in every
// fundamental domain. The fresh points occupy f(anchor)-count .. f(anchor)-1.
struct UpperInsertion {
    long long anchor;
    Index m;
    Index count;
    long long operator()(long long U) const {
        long long q = floordiv(U - anchor, m);
        long long rem = U - anchor - q * m;
        return q * (m + count) + rem + count;
    }
};

AnnulusTriangulation bump_with_single_bridge(const AnnulusTriangulation& T, Index j);
AnnulusTriangulation bump_with_bridge_fan(const AnnulusTriangulation& T, Index j);
AnnulusTriangulation bump_under_arches(const AnnulusTriangulation& T, Index j);

} // namespace

AnnulusTriangulation bump_realization(const AnnulusTriangulation& T, Index j) {
    if (j < 1 || j > T.n) throw std::invalid_argument("bump_realization: outer index out of range");
    {
        ValidityReport rep = check_triangulation(T);
        if (!rep.ok)
            throw std::invalid_argument("bump_realization needs a valid triangulation: " + rep.failures.front());
    }
    bool asym_at_j = false;
    long long bridges_at_j = 0;
    for (const Arc& arc : T.arcs) {
        if (arc.kind == Arc::Kind::asymptotic && arc.base == MarkedPoint{Boundary::outer, j})
            asym_at_j = true;
        if (arc.kind == Arc::Kind::bridging && arc.outer_point == j) ++bridges_at_j;
    }

    AnnulusTriangulation R;
    if (asym_at_j) {
        R = bump_asymptotic_at(T, j);
    } else if (bridges_at_j >= 2) {
        R = bump_with_bridge_fan(T, j);
    } else if (bridges_at_j == 1) {
        R = bump_with_single_bridge(T, j);
    } else if (has_asymptotic(T)) {
        // No local surgery reaches j without crossing the asymptotic fans;
        // rebuild the bumped sequence from scratch instead.
        std::vector<long long> q = outer_quiddity(T);
        q[static_cast<std::size_t>(j - 1)] += 1;
        R = realize(q);
    } else {
        R = bump_under_arches(T, j);
    }

    std::vector<long long> expect = outer_quiddity(T);
    expect[static_cast<std::size_t>(j - 1)] += 1;
    if (outer_quiddity(R) != expect)
        throw std::logic_error("bump_realization changed the quiddity incorrectly");
    ValidityReport rep = check_triangulation(R);
    if (!rep.ok) throw std::logic_error("bump_realization produced an invalid triangulation: " + rep.failures.front());
    return R;
}

namespace {

// Case of at least two bridging arcs at j: the face between the two lowest
// arcs of the fan is a triangle whose inner side is either a peripheral arc
// (then flip it) or a boundary segment (then insert an inner vertex and add
// one bridging arc into the quadrilateral).
AnnulusTriangulation bump_with_bridge_fan(const AnnulusTriangulation& T, Index j) {
    LiftWorkspace ws{T.n, T.m, to_lifts(T)};
    const long long Lj = j - 1;
    auto fan = ws.bridges_at_lower(Lj);
    const long long U1 = fan[0].second, U2 = fan[1].second;

    // inner arch matching the lift interval [U1, U2], if any
    std::optional<std::size_t> arch;
    for (std::size_t i = 0; i < ws.lifts.size(); ++i) {
        const LiftArc& la = ws.lifts[i];
        if (la.kind != LiftArc::Kind::up_arch) continue;
        if (la.b - la.a == U2 - U1 && floormod(U1 - la.a, T.m) == 0) arch = i;
    }

    if (arch) {
        // apex of the face on the other side of the arch
        std::optional<long long> apex;
        for (long long y = U1 + 1; y < U2; ++y) {
            if (!ws.up_edge_exists(U1, y) || !ws.up_edge_exists(y, U2)) continue;
            if (apex) throw std::logic_error("ambiguous flip quadrilateral");
            apex = y;
        }
        if (!apex) throw std::logic_error("no flip partner above the inner arc");
        std::vector<LiftArc> lifts = ws.lifts;
        lifts.erase(lifts.begin() + static_cast<std::ptrdiff_t>(*arch));
        lifts.push_back({LiftArc::Kind::bridge, Lj, *apex});
        return from_lifts(T.n, T.m, lifts, T.winding_bound);
    }

    if (U2 != U1 + 1)
        throw std::logic_error("fan face at j closed by neither an arc nor a segment");
    // insert one inner vertex into the segment between the two fan targets
    UpperInsertion f{U2, T.m, 1};
    std::vector<LiftArc> lifts;
    for (const LiftArc& la : ws.lifts) {
        LiftArc copy = la;
        if (la.kind == LiftArc::Kind::bridge) {
            copy.b = f(la.b);
        } else if (la.kind == LiftArc::Kind::up_arch) {
            copy.a = f(la.a);
            copy.b = f(la.b);
        }
        lifts.push_back(copy);
    }
    lifts.push_back({LiftArc::Kind::bridge, Lj, f(U2) - 1});
    return from_lifts(T.n, T.m + 1, lifts, T.winding_bound);
}

// Case of exactly one bridging arc alpha at j: take the triangle on the left
// of alpha, insert a new inner vertex left of alpha's inner endpoint, slide
// every arc end at that endpoint lying left of the triangle's other bridging
// arc onto the new vertex, and add the bridging arc from j.
AnnulusTriangulation bump_with_single_bridge(const AnnulusTriangulation& T, Index j) {
    LiftWorkspace ws{T.n, T.m, to_lifts(T)};
    const long long Lj = j - 1;
    auto fan = ws.bridges_at_lower(Lj);
    const long long Ua = fan[0].second;

    // left neighbour X of j in the face fan: the widest lower arch ending at
    // Lj from the left, else the boundary neighbour
    long long X = Lj - 1;
    for (const LiftArc& la : ws.lifts) {
        if (la.kind != LiftArc::Kind::low_arch) continue;
        if (floormod(Lj - la.b, T.n) != 0) continue;
        long long t = (Lj - la.b) / T.n;
        X = std::min(X, la.a + t * T.n);
    }
    // the triangle's second bridging arc, from X to Ua, must be present
    {
        bool found = false;
        for (const auto& [idx, U] : ws.bridges_at_lower(X))
            if (U == Ua) found = true;
        if (!found) throw std::logic_error("no bridging arc closes the face left of j");
    }

    UpperInsertion f{Ua, T.m, 1}; // fresh vertex at absolute position f(Ua) - 1
    const long long fresh = f(Ua) - 1;
    std::vector<LiftArc> lifts;
    for (const LiftArc& la : ws.lifts) {
        LiftArc copy = la;
        if (la.kind == LiftArc::Kind::bridge) {
            // end at the lift Ua and left of the wall moves to the fresh vertex
            long long t_num = Ua - la.b;
            if (floormod(t_num, T.m) == 0) {
                long long t = t_num / T.m;
                long long Z = la.a + t * T.n;
                if (Z <= X) {
                    copy.a = Z;
                    copy.b = fresh;
                    lifts.push_back(copy);
                    continue;
                }
            }
            copy.b = f(la.b);
        } else if (la.kind == LiftArc::Kind::up_arch) {
            long long t_num = Ua - la.b;
            if (floormod(t_num, T.m) == 0) {
                // right end hangs left over the boundary: slide it
                long long t = t_num / T.m;
                copy.a = f(la.a + t * T.m);
                copy.b = fresh;
                lifts.push_back(copy);
                continue;
            }
            copy.a = f(la.a);
            copy.b = f(la.b);
        }
        lifts.push_back(copy);
    }
    lifts.push_back({LiftArc::Kind::bridge, Lj, fresh});
    return from_lifts(T.n, T.m + 1, lifts, T.winding_bound);
}

// Case of no bridging and no asymptotic arc at j in a bridging picture: j is
// buried under a tower of k nested arches. Remove the tower, open the apex
// of the face above the outermost arch by sliding its left-side ends onto
// the first of k+1 fresh inner points, and retriangulate the opened polygon
// with one bridging arc per lost arch end plus one for j.
AnnulusTriangulation bump_under_arches(const AnnulusTriangulation& T, Index j) {
    LiftWorkspace ws{T.n, T.m, to_lifts(T)};
    const long long Lj = j - 1;

    struct Tower {
        std::size_t idx;
        long long a, b;
    };
    std::vector<Tower> tower;
    for (std::size_t i = 0; i < ws.lifts.size(); ++i) {
        const LiftArc& la = ws.lifts[i];
        if (la.kind != LiftArc::Kind::low_arch) continue;
        // translate containing Lj strictly, if any
        for (long long t = floordiv(Lj - la.b, T.n); t <= floordiv(Lj - la.a, T.n) + 1; ++t) {
            long long a = la.a + t * T.n, b = la.b + t * T.n;
            if (a < Lj && Lj < b) tower.push_back({i, a, b});
        }
    }
    if (tower.empty())
        throw std::logic_error("no arch above an outer point without bridging arcs");
    std::sort(tower.begin(), tower.end(),
              [](const Tower& x, const Tower& y) { return x.b - x.a < y.b - y.a; });
    const Index k = static_cast<Index>(tower.size());
    for (Index i = 0; i + 1 < k; ++i) {
        const Tower& in = tower[static_cast<std::size_t>(i)];
        const Tower& out = tower[static_cast<std::size_t>(i + 1)];
        bool left_shared = in.a == out.a, right_shared = in.b == out.b;
        if (out.a > in.a || out.b < in.b || left_shared == right_shared)
            throw std::logic_error("arches above j do not form a shared-endpoint tower");
    }

    const long long left_wall = tower.back().a, right_wall = tower.back().b;
    auto left_fan = ws.bridges_at_lower(left_wall);
    auto right_fan = ws.bridges_at_lower(right_wall);
    if (left_fan.empty() || right_fan.empty())
        throw std::logic_error("tower walls carry no bridging arcs");
    const long long apex = left_fan.back().second;
    if (right_fan.front().second != apex)
        throw std::logic_error("tower walls do not meet at a common apex");

    // quotas: every removed arch end must be replaced at its lower vertex
    std::map<long long, long long> quota;
    for (const Tower& tw : tower) {
        quota[tw.a] += 1;
        quota[tw.b] += 1;
    }
    quota[Lj] = 1;

    UpperInsertion f{apex, T.m, k + 1}; // fresh vertices at f(apex)-k-1 .. f(apex)-1
    const long long first_fresh = f(apex) - (k + 1);

    std::vector<LiftArc> lifts;
    std::set<std::size_t> removed;
    for (const Tower& tw : tower) removed.insert(tw.idx);
    for (std::size_t i = 0; i < ws.lifts.size(); ++i) {
        if (removed.count(i)) continue;
        LiftArc copy = ws.lifts[i];
        if (copy.kind == LiftArc::Kind::bridge) {
            long long t_num = apex - copy.b;
            if (floormod(t_num, T.m) == 0) {
                long long t = t_num / T.m;
                long long Z = copy.a + t * T.n;
                if (Z < right_wall) { // left of the right wall: slide to the first fresh point
                    copy.a = Z;
                    copy.b = first_fresh;
                    lifts.push_back(copy);
                    continue;
                }
            }
            copy.b = f(copy.b);
        } else if (copy.kind == LiftArc::Kind::up_arch) {
            long long t_num = apex - copy.b;
            if (floormod(t_num, T.m) == 0) {
                long long t = t_num / T.m;
                copy.a = f(copy.a + t * T.m);
                copy.b = first_fresh;
                lifts.push_back(copy);
                continue;
            }
            copy.a = f(copy.a);
            copy.b = f(copy.b);
        }
        lifts.push_back(copy);
    }

    // staircase over the opened polygon: fresh vertices first_fresh..+k, apex
    // at f(apex); the slid wall arc provides the first connection for free,
    // the kept right wall the last one.
    long long next_upper = first_fresh + 1;
    bool first_lower = true;
    for (auto it = quota.begin(); it != quota.end(); ++it) {
        long long lower = it->first, q = it->second;
        long long from = first_lower ? next_upper : next_upper - 1;
        for (long long c = 0; c < q; ++c)
            lifts.push_back({LiftArc::Kind::bridge, lower, from + c});
        next_upper = from + q;
        first_lower = false;
    }
    if (next_upper != f(apex) || quota.rbegin()->first != right_wall)
        throw std::logic_error("staircase bookkeeping is off");

    return from_lifts(T.n, T.m + k + 1, lifts, T.winding_bound);
}

} // namespace

ValidityReport check_disc(const PuncturedDisc& D) {
    // A punctured disc behaves like A_{n,0} with central arcs in the role of
    // same-direction asymptotic arcs.
    AnnulusTriangulation T;
    T.n = D.n;
    T.m = 0;
    for (const DiscArc& arc : D.arcs) {
        if (arc.kind == DiscArc::Kind::peripheral)
            T.arcs.push_back(Arc::peripheral(Boundary::outer, arc.from, arc.to));
        else
            T.arcs.push_back(Arc::asymptotic(MarkedPoint{Boundary::outer, arc.at}, Spiral::left));
    }
    return check_triangulation(T);
}

std::vector<long long> disc_quiddity(const PuncturedDisc& D) {
    std::vector<long long> q(static_cast<std::size_t>(D.n), 1);
    for (const DiscArc& arc : D.arcs) {
        if (arc.kind == DiscArc::Kind::peripheral) {
            q[static_cast<std::size_t>(arc.from - 1)] += 1;
            q[static_cast<std::size_t>(arc.to - 1)] += 1;
        } else {
            q[static_cast<std::size_t>(arc.at - 1)] += 1;
        }
    }
    return q;
}

AnnulusTriangulation disc_to_annulus(const PuncturedDisc& D) {
    ValidityReport rep = check_disc(D);
    if (!rep.ok) throw std::invalid_argument("disc_to_annulus: " + rep.failures.front());
    AnnulusTriangulation T;
    T.n = D.n;
    T.m = 0;
    for (const DiscArc& arc : D.arcs) {
        if (arc.kind == DiscArc::Kind::peripheral)
            T.arcs.push_back(Arc::peripheral(Boundary::outer, arc.from, arc.to));
        else
            T.arcs.push_back(Arc::asymptotic(MarkedPoint{Boundary::outer, arc.at}, Spiral::left));
    }
    std::sort(T.arcs.begin(), T.arcs.end());
    return T;
}

PuncturedDisc annulus0_to_disc(const AnnulusTriangulation& T) {
    if (T.m != 0) throw std::invalid_argument("annulus0_to_disc needs m = 0");
    PuncturedDisc D;
    D.n = T.n;
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral: {
            DiscArc d;
            d.kind = DiscArc::Kind::peripheral;
            d.from = arc.from;
            d.to = arc.to;
            D.arcs.push_back(d);
            break;
        }
        case Arc::Kind::asymptotic: {
            DiscArc d;
            d.kind = DiscArc::Kind::central;
            d.at = arc.base.index;
            D.arcs.push_back(d);
            break;
        }
        case Arc::Kind::bridging:
            throw std::invalid_argument("annulus0_to_disc: bridging arc in an m = 0 annulus");
        }
    }
    ValidityReport rep = check_disc(D);
    if (!rep.ok) throw std::invalid_argument("annulus0_to_disc: " + rep.failures.front());
    std::sort(D.arcs.begin(), D.arcs.end());
    return D;
}

} // namespace frieze
