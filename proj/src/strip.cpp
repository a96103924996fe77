#include "frieze/strip.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frieze {

namespace {

// Sparse view of the bi-infinite row during peeling; positions not stored
// read as 2.
struct SparseRow {
    std::map<Index, long long> values;
    std::set<Index> removed;
    Index touched_lo, touched_hi;

    explicit SparseRow(const QuiddityRow& window) {
        touched_lo = window.lo();
        touched_hi = window.hi();
        for (Index i = window.lo(); i <= window.hi(); ++i) values[i] = window.at(i);
    }

    long long at(Index i) const {
        auto it = values.find(i);
        return it == values.end() ? 2 : it->second;
    }
    bool alive(Index i) const { return !removed.count(i); }
    void touch(Index i) {
        touched_lo = std::min(touched_lo, i);
        touched_hi = std::max(touched_hi, i);
    }
    Index prev_alive(Index i) const {
        for (Index p = i - 1;; --p)
            if (alive(p)) return p;
    }
    Index next_alive(Index i) const {
        for (Index p = i + 1;; ++p)
            if (alive(p)) return p;
    }
    void set(Index i, long long v) {
        values[i] = v;
        touch(i);
    }
};

} // namespace

StripTriangulation realize_strip(const QuiddityRow& window, Index round_cap) {
    if (!window.is_windowed())
        throw std::invalid_argument("realize_strip needs a windowed row");
    if (round_cap < 0) round_cap = 10 * window.size() + 100;

    SparseRow row(window);
    StripTriangulation T;
    T.core_lo = window.lo();
    T.core_hi = window.hi();

    // peeling rounds: all current 1s go at once, each under the peripheral
    // arc joining its surviving neighbours
    Index rounds = 0;
    for (;;) {
        std::vector<Index> ones;
        for (const auto& [i, v] : row.values)
            if (v == 1 && row.alive(i)) ones.push_back(i);
        if (ones.empty()) break;
        if (++rounds > round_cap)
            throw StripError(StripError::Kind::round_limit, ones.front(),
                             "peeling did not stabilize within " + std::to_string(round_cap) +
                                 " rounds; the window may only be realizable with the generic arc");
        for (Index t : ones) {
            Index right = row.next_alive(t);
            if (row.at(right) == 1)
                throw StripError(StripError::Kind::adjacent_ones, t,
                                 "entries at " + std::to_string(t) + " and " + std::to_string(right) +
                                     " are adjacent 1s; the row is not a frieze quiddity");
        }
        for (Index t : ones) {
            Index left = row.prev_alive(t);
            Index right = row.next_alive(t);
            T.lower_arches.push_back({left, right});
            row.touch(left);
            row.touch(right);
        }
        for (Index t : ones) row.removed.insert(t);
        for (Index t : ones) {
            for (Index nb : {row.prev_alive(t), row.next_alive(t)}) {
                row.set(nb, row.at(nb) - 1);
                if (row.at(nb) <= 0)
                    throw StripError(StripError::Kind::nonpositive_entry, nb,
                                     "entry at " + std::to_string(nb) +
                                         " drops to zero; the row is not a frieze quiddity");
            }
        }
    }

    T.spill = std::max<Index>({0, window.lo() - row.touched_lo, row.touched_hi - window.hi()});
    T.stored_lo = std::min(window.lo(), row.touched_lo) - 2;
    T.stored_hi = std::max(window.hi(), row.touched_hi) + 2;
    // everything incident with the interior of the stored range is stored,
    // so the guarantees extend one step beyond the requested window
    T.core_lo = T.stored_lo + 1;
    T.core_hi = T.stored_hi - 1;

    // bridging completion: entries above 2 grow a fan of fresh upper
    // vertices, then every survivor sends one more arc to the first upper
    // vertex beyond its own fan (the rightmost one if nothing lies beyond)
    struct Fan {
        Index anchor;
        long long d;
    };
    std::vector<Fan> fans;
    for (const auto& [i, v] : row.values)
        if (row.alive(i) && v > 2) fans.push_back({i, v - 2});
    std::sort(fans.begin(), fans.end(), [](const Fan& a, const Fan& b) { return a.anchor < b.anchor; });

    std::vector<Rat> upper;
    std::vector<std::pair<Index, Index>> fan_arcs; // (lower, upper index)
    std::map<Index, Rat> own_last;                 // survivor -> x of its last fan vertex
    for (const Fan& fan : fans) {
        for (long long c = 1; c <= fan.d; ++c) {
            upper.push_back(Rat(fan.anchor) + Rat(c, fan.d + 1));
            fan_arcs.emplace_back(fan.anchor, static_cast<Index>(upper.size()) - 1);
        }
        own_last[fan.anchor] = upper.back();
    }
    // one extra vertex capping the fan chain on the right; it is also the
    // only upper vertex when the reduced row is constant 2
    upper.push_back(fans.empty() ? Rat(T.core_lo + T.core_hi, 2) + Rat(1, 2)
                                 : upper.back() + 1);
    T.upper = upper;
    for (auto& [lower, idx] : fan_arcs) T.bridges.push_back({lower, idx});

    for (Index p = T.stored_lo; p <= T.stored_hi; ++p) {
        if (!row.alive(p)) continue;
        Rat beyond = own_last.count(p) ? own_last[p] : Rat(p);
        Index target = -1;
        for (Index u = 0; u < static_cast<Index>(upper.size()); ++u)
            if (upper[static_cast<std::size_t>(u)] > beyond) {
                target = u;
                break;
            }
        if (target < 0) target = static_cast<Index>(upper.size()) - 1;
        T.bridges.push_back({p, target});
    }

    std::sort(T.lower_arches.begin(), T.lower_arches.end());
    std::sort(T.bridges.begin(), T.bridges.end());
    return T;
}

namespace {

// Planar rotation system of the stored window. Rotations are counter-
// clockwise; faces are traced by stepping to the rotation predecessor of the
// reversed half-edge, so interior faces come out as their vertex cycles.
struct StripGraph {
    const StripTriangulation& T;
    Index n_low;
    std::vector<std::array<Index, 2>> edges; // vertex ids
    std::vector<std::vector<Index>> rotation; // per vertex: departing half-edges, ccw

    Index vid(const StripVertex& v) const {
        return v.upper ? n_low + v.v : v.v - T.stored_lo;
    }
    StripVertex vertex(Index id) const {
        if (id < n_low) return {false, id + T.stored_lo};
        return {true, id - n_low};
    }
    Index head(Index he) const { return edges[static_cast<std::size_t>(he / 2)][he % 2 == 0 ? 1 : 0]; }
    Index tail(Index he) const { return edges[static_cast<std::size_t>(he / 2)][he % 2 == 0 ? 0 : 1]; }
    Index twin(Index he) const { return he ^ 1; }

    explicit StripGraph(const StripTriangulation& t) : T(t) {
        n_low = T.stored_hi - T.stored_lo + 1;
        const Index n_up = static_cast<Index>(T.upper.size());

        struct Slot {
            int cls;
            Rat key;
            Index he;
        };
        std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(n_low + n_up));
        auto add_edge = [&](StripVertex a, StripVertex b) {
            edges.push_back({vid(a), vid(b)});
            return static_cast<Index>(edges.size()) * 2 - 2;
        };
        auto x_of = [&](const StripVertex& v) {
            return v.upper ? T.upper[static_cast<std::size_t>(v.v)] : Rat(v.v);
        };
        // ccw classes at a lower vertex: segment right, right arches (span
        // ascending), bridges (target x descending), left arches (span
        // descending), segment left
        auto low_slot = [&](Index he, StripVertex self, StripVertex other, bool arch) {
            Rat dx = x_of(other) - x_of(self);
            if (other.upper) return Slot{2, -x_of(other), he};
            if (arch) return dx > 0 ? Slot{1, dx, he} : Slot{3, dx, he};
            return dx > 0 ? Slot{0, Rat(0), he} : Slot{4, Rat(0), he};
        };
        // ccw classes at an upper vertex: segment right, segment left, left
        // arches (span ascending), bridges (target x ascending), right
        // arches (span descending)
        auto up_slot = [&](Index he, StripVertex self, StripVertex other, bool arch) {
            Rat dx = x_of(other) - x_of(self);
            if (!other.upper) return Slot{3, x_of(other), he};
            if (arch) return dx < 0 ? Slot{2, dx, he} : Slot{4, -dx, he};
            return dx > 0 ? Slot{0, Rat(0), he} : Slot{1, Rat(0), he};
        };
        auto add = [&](StripVertex a, StripVertex b, bool arch) {
            Index he = add_edge(a, b);
            auto slot_for = [&](StripVertex self, StripVertex other, Index h) {
                return self.upper ? up_slot(h, self, other, arch) : low_slot(h, self, other, arch);
            };
            slots[static_cast<std::size_t>(vid(a))].push_back(slot_for(a, b, he));
            slots[static_cast<std::size_t>(vid(b))].push_back(slot_for(b, a, he + 1));
        };

        for (Index x = T.stored_lo; x < T.stored_hi; ++x)
            add({false, x}, {false, x + 1}, false);
        for (Index u = 0; u + 1 < n_up; ++u)
            add({true, u}, {true, u + 1}, false);
        for (const auto& arch : T.lower_arches)
            add({false, arch.from}, {false, arch.to}, true);
        for (const auto& arch : T.upper_arches)
            add({true, arch.from}, {true, arch.to}, true);
        for (const auto& br : T.bridges)
            add({false, br.lower}, {true, br.upper}, false);

        rotation.resize(slots.size());
        for (std::size_t v = 0; v < slots.size(); ++v) {
            auto& sl = slots[v];
            std::sort(sl.begin(), sl.end(), [](const Slot& a, const Slot& b) {
                if (a.cls != b.cls) return a.cls < b.cls;
                return a.key < b.key;
            });
            for (const Slot& s : sl) rotation[v].push_back(s.he);
        }
    }

    Index next_in_face(Index he) const {
        Index v = head(he);
        Index r = twin(he);
        const auto& rot = rotation[static_cast<std::size_t>(v)];
        auto it = std::find(rot.begin(), rot.end(), r);
        std::size_t idx = static_cast<std::size_t>(it - rot.begin());
        return rot[(idx + rot.size() - 1) % rot.size()];
    }
};

} // namespace

std::vector<StripTriangle> strip_faces(const StripTriangulation& T) {
    StripGraph g(T);
    std::vector<StripTriangle> out;
    std::vector<char> seen(g.edges.size() * 2, 0);
    for (Index he = 0; he < static_cast<Index>(g.edges.size() * 2); ++he) {
        if (seen[static_cast<std::size_t>(he)]) continue;
        std::vector<Index> orbit;
        Index cur = he;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            orbit.push_back(cur);
            cur = g.next_in_face(cur);
        } while (cur != he && orbit.size() <= g.edges.size() * 2);
        if (orbit.size() != 3) continue;
        StripTriangle tri;
        for (int c = 0; c < 3; ++c) tri.corners[static_cast<std::size_t>(c)] = g.vertex(g.tail(orbit[static_cast<std::size_t>(c)]));
        std::sort(tri.corners.begin(), tri.corners.end());
        if (tri.corners[0] == tri.corners[1] || tri.corners[1] == tri.corners[2]) continue;
        out.push_back(tri);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> strip_quiddity(const StripTriangulation& T, Index lo, Index hi) {
    if (lo < T.core_lo || hi > T.core_hi || lo > hi)
        throw std::out_of_range("strip_quiddity range outside the core window");
    std::vector<StripTriangle> faces = strip_faces(T);
    std::vector<long long> q(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const StripTriangle& tri : faces)
        for (const StripVertex& c : tri.corners)
            if (!c.upper && c.v >= lo && c.v <= hi) q[static_cast<std::size_t>(c.v - lo)] += 1;
    return q;
}

std::vector<StripTriangle> triangles_in_range(const StripTriangulation& T, Index i, Index j) {
    if (i > j || i < T.core_lo || j > T.core_hi)
        throw std::out_of_range("triangles_in_range outside the core window");
    std::vector<StripTriangle> out;
    for (const StripTriangle& tri : strip_faces(T))
        for (Index v = i; v <= j; ++v)
            if (tri.touches_lower(v)) {
                out.push_back(tri);
                break;
            }
    return out;
}

ValidityReport check_strip(const StripTriangulation& T) {
    ValidityReport rep;
    const Index n_up = static_cast<Index>(T.upper.size());
    for (Index u = 0; u + 1 < n_up; ++u)
        if (!(T.upper[static_cast<std::size_t>(u)] < T.upper[static_cast<std::size_t>(u + 1)]))
            rep.fail("upper positions not strictly increasing");
    for (const auto& arch : T.lower_arches) {
        if (arch.from + 2 > arch.to) rep.fail("lower arch spans fewer than two segments");
        if (arch.from < T.stored_lo || arch.to > T.stored_hi) rep.fail("lower arch outside the stored range");
    }
    for (const auto& arch : T.upper_arches)
        if (arch.from >= arch.to || arch.to >= n_up) rep.fail("bad upper arch");
    for (const auto& br : T.bridges)
        if (br.lower < T.stored_lo || br.lower > T.stored_hi || br.upper >= n_up)
            rep.fail("bridge endpoint outside the stored range");
    if (!rep.ok) return rep;

    auto ux = [&](Index u) { return T.upper[static_cast<std::size_t>(u)]; };
    for (std::size_t a = 0; a < T.bridges.size(); ++a)
        for (std::size_t b = a + 1; b < T.bridges.size(); ++b) {
            const auto &p = T.bridges[a], &q = T.bridges[b];
            if (p == q) {
                rep.fail("duplicate bridge");
                continue;
            }
            Rat prod = Rat(p.lower - q.lower) * (ux(p.upper) - ux(q.upper));
            if (prod < 0) rep.fail("bridges cross at lower " + std::to_string(p.lower) + "," + std::to_string(q.lower));
        }
    for (const auto& br : T.bridges) {
        for (const auto& arch : T.lower_arches)
            if (arch.from < br.lower && br.lower < arch.to)
                rep.fail("bridge at " + std::to_string(br.lower) + " starts under a lower arch");
        for (const auto& arch : T.upper_arches)
            if (ux(arch.from) < ux(br.upper) && ux(br.upper) < ux(arch.to))
                rep.fail("bridge ends under an upper arch");
    }
    auto interleave = [](Rat a1, Rat b1, Rat a2, Rat b2) {
        return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
    };
    for (std::size_t a = 0; a < T.lower_arches.size(); ++a)
        for (std::size_t b = a + 1; b < T.lower_arches.size(); ++b) {
            const auto &p = T.lower_arches[a], &q = T.lower_arches[b];
            if (p == q) rep.fail("duplicate lower arch");
            else if (interleave(Rat(p.from), Rat(p.to), Rat(q.from), Rat(q.to)))
                rep.fail("lower arches interleave");
        }
    for (std::size_t a = 0; a < T.upper_arches.size(); ++a)
        for (std::size_t b = a + 1; b < T.upper_arches.size(); ++b) {
            const auto &p = T.upper_arches[a], &q = T.upper_arches[b];
            if (p == q) rep.fail("duplicate upper arch");
            else if (interleave(ux(p.from), ux(p.to), ux(q.from), ux(q.to)))
                rep.fail("upper arches interleave");
        }
    if (!rep.ok) return rep;

    // every face whose vertices all lie strictly inside the stored margins
    // must be a triangle
    StripGraph g(T);
    std::vector<char> seen(g.edges.size() * 2, 0);
    for (Index he = 0; he < static_cast<Index>(g.edges.size() * 2); ++he) {
        if (seen[static_cast<std::size_t>(he)]) continue;
        std::vector<Index> orbit;
        Index cur = he;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            orbit.push_back(cur);
            cur = g.next_in_face(cur);
        } while (cur != he && orbit.size() <= g.edges.size() * 2);
        bool interior = true;
        for (Index h : orbit) {
            StripVertex v = g.vertex(g.tail(h));
            if (!v.upper && (v.v <= T.stored_lo || v.v >= T.stored_hi)) interior = false;
        }
        if (interior && orbit.size() != 3)
            rep.fail("interior face with " + std::to_string(orbit.size()) + " sides");
    }
    return rep;
}

QuiddityRow core_row(const StripTriangulation& T) {
    std::vector<long long> vals = strip_quiddity(T, T.core_lo, T.core_hi);
    return QuiddityRow::windowed(T.core_lo, vals);
}

StripTriangulation unroll_to_strip(const AnnulusTriangulation& A, Index domains) {
    const Index n = A.n, m = A.m;
    StripTriangulation T;
    T.stored_lo = -domains * n;
    T.stored_hi = (domains + 1) * n - 1;
    T.core_lo = 0;
    T.core_hi = n - 1;

    bool asym = false;
    for (const Arc& arc : A.arcs)
        if (arc.kind == Arc::Kind::asymptotic) asym = true;

    if (asym) {
        Spiral dir = Spiral::left;
        for (const Arc& arc : A.arcs)
            if (arc.kind == Arc::Kind::asymptotic) dir = arc.spiral;
        // single far-side vertex standing in for the meridian spiral
        T.upper.push_back(dir == Spiral::left ? Rat(T.stored_lo - 1) : Rat(T.stored_hi + 1));
        for (const Arc& arc : A.arcs) {
            if (arc.kind == Arc::Kind::peripheral && arc.boundary == Boundary::outer) {
                Index a = arc.from - 1;
                Index len = arc.from == arc.to ? n : ((arc.to - arc.from) % n + n) % n;
                for (Index t = -domains - 1; t <= domains + 1; ++t) {
                    Index lo = a + t * n, hi = lo + len;
                    if (lo >= T.stored_lo && hi <= T.stored_hi) T.lower_arches.push_back({lo, hi});
                }
            } else if (arc.kind == Arc::Kind::asymptotic && arc.base.boundary == Boundary::outer) {
                Index b = arc.base.index - 1;
                for (Index t = -domains; t <= domains; ++t) {
                    Index L = b + t * n;
                    if (L >= T.stored_lo && L <= T.stored_hi) T.bridges.push_back({L, 0});
                }
            }
            // inner-boundary arcs of an asymptotic picture never bound a
            // triangle incident with the lower boundary
        }
    } else if (m > 0) {
        // upper lifts: absolute index U at x = U * n / m keeps the cover
        // ordering of both boundaries
        const Index u_lo = -domains * m, u_hi = (domains + 1) * m;
        auto uidx = [&](Index U) { return U - u_lo; };
        for (Index U = u_lo; U <= u_hi; ++U) T.upper.push_back(Rat(U * n, m));
        for (const Arc& arc : A.arcs) {
            switch (arc.kind) {
            case Arc::Kind::peripheral: {
                if (arc.boundary == Boundary::outer) {
                    Index a = arc.from - 1;
                    Index len = arc.from == arc.to ? n : ((arc.to - arc.from) % n + n) % n;
                    for (Index t = -domains - 1; t <= domains + 1; ++t) {
                        Index lo = a + t * n, hi = lo + len;
                        if (lo >= T.stored_lo && hi <= T.stored_hi) T.lower_arches.push_back({lo, hi});
                    }
                } else {
                    Index a = arc.from - n - 1;
                    Index len = arc.from == arc.to ? m : ((arc.to - arc.from) % m + m) % m;
                    for (Index t = -domains - 2; t <= domains + 2; ++t) {
                        Index lo = a + t * m, hi = lo + len;
                        if (lo >= u_lo && hi <= u_hi) T.upper_arches.push_back({uidx(lo), uidx(hi)});
                    }
                }
                break;
            }
            case Arc::Kind::bridging: {
                Index L0 = arc.outer_point - 1;
                Index U0 = (arc.inner_point - n - 1) + arc.winding * m;
                for (Index t = -domains - 1; t <= domains + 1; ++t) {
                    Index L = L0 + t * n, U = U0 + t * m;
                    if (L >= T.stored_lo && L <= T.stored_hi && U >= u_lo && U <= u_hi)
                        T.bridges.push_back({L, uidx(U)});
                }
                break;
            }
            case Arc::Kind::asymptotic:
                break;
            }
        }
    }
    std::sort(T.lower_arches.begin(), T.lower_arches.end());
    std::sort(T.upper_arches.begin(), T.upper_arches.end());
    std::sort(T.bridges.begin(), T.bridges.end());
    return T;
}

} // namespace frieze
