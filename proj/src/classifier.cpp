#include "frieze/classifier.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace frieze {

namespace {

std::vector<long long> normalized(const std::vector<long long>& s, Index r) {
    return {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r)};
}

bool all_at_least_two(const std::vector<long long>& s) {
    return std::all_of(s.begin(), s.end(), [](long long a) { return a >= 2; });
}

bool has_adjacent_ones(const std::vector<long long>& s) {
    const Index n = static_cast<Index>(s.size());
    if (n < 2) return false;
    for (Index i = 0; i < n; ++i)
        if (s[static_cast<std::size_t>(i)] == 1 && s[static_cast<std::size_t>((i + 1) % n)] == 1)
            return true;
    return false;
}

// Polygon order of the finite stopping bases (1), (1,2), (1,3).
Index finite_base_order(const std::vector<long long>& base) {
    if (base.size() == 1) return 3;
    long long a = std::max(base[0], base[1]);
    return a == 2 ? 4 : 6;
}

// Base for the minimal-inner-points formula. Assumes the sequence already
// hit a stopping condition of the infinite kind.
Index minimal_inner_points_of_base(const std::vector<long long>& base) {
    const Index r = static_cast<Index>(base.size());
    if (r == 1) return base[0] - 2;
    if (r == 2) {
        long long b1 = base[0], b2 = base[1];
        if (b1 == 1) return b2 - 4;
        if (b2 == 1) return b1 - 4;
    }
    Index m = 0;
    for (long long b : base) m += b - 2;
    return m;
}

// First nonpositive entry of the fragment of the periodic row, scanned by
// depth. Classification theory puts one at depth <= n + 2.
std::pair<Index, Index> find_rejection_witness(const std::vector<long long>& entries) {
    QuiddityRow q = QuiddityRow::periodic(entries);
    const Index n = static_cast<Index>(entries.size());
    FriezeFragment f = fragment(q, 0, n - 1, n + 2);
    for (Index d = 0; d <= n + 2; ++d)
        for (Index i = 0; i < n; ++i)
            if (f.at(i, i + d) <= 0) return {i, i + d};
    throw std::logic_error("rejected sequence has no nonpositive entry at depth <= n + 2");
}

Index polygon_order_of(const std::vector<long long>& entries) {
    QuiddityRow q = QuiddityRow::periodic(entries);
    const Index n = static_cast<Index>(entries.size());
    const Index cap = n * 64;
    // Row at depth d, advanced in place; order is N = d + 3 at the all-ones
    // row followed by the all-zeros row.
    std::vector<Int> prev(static_cast<std::size_t>(n)), cur(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        prev[static_cast<std::size_t>(i)] = 1;
        cur[static_cast<std::size_t>(i)] = q.at(i);
    }
    for (Index d = 0; d <= cap; ++d) {
        bool ones = std::all_of(cur.begin(), cur.end(), [](const Int& v) { return v == 1; });
        if (ones) {
            std::vector<Int> next(static_cast<std::size_t>(n));
            bool zeros = true;
            for (Index i = 0; i < n; ++i) {
                next[static_cast<std::size_t>(i)] =
                    Int(q.at(i + d + 1)) * cur[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)];
                if (next[static_cast<std::size_t>(i)] != 0) zeros = false;
            }
            if (zeros) return d + 3;
        }
        std::vector<Int> next(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i)
            next[static_cast<std::size_t>(i)] =
                Int(q.at(i + d + 1)) * cur[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)];
        prev = std::move(cur);
        cur = std::move(next);
    }
    throw std::logic_error("no all-ones/all-zeros rows within the safety cap");
}

TriangulatedPolygon realize_polygon_impl(const std::vector<long long>& entries, Index N);

} // namespace

std::vector<long long> TriangulatedPolygon::quiddity() const {
    std::vector<long long> q(static_cast<std::size_t>(n), 1);
    for (const auto& [u, v] : diagonals) {
        q[static_cast<std::size_t>(u - 1)] += 1;
        q[static_cast<std::size_t>(v - 1)] += 1;
    }
    return q;
}

Classification classify(const std::vector<long long>& entries) {
    if (entries.empty()) throw std::invalid_argument("classify needs a nonempty tuple");
    for (long long a : entries)
        if (a < 1) throw std::invalid_argument("classify needs positive entries");

    Classification cls;
    cls.shortest_period = shortest_period(entries);

    std::vector<long long> seq = entries;
    auto note_normalize = [&](std::vector<long long>& s) {
        Index r = shortest_period(s);
        if (r == static_cast<Index>(s.size())) return;
        ReductionStep step;
        step.kind = ReductionStep::Kind::normalize;
        step.before = s;
        step.factor = static_cast<Index>(s.size()) / r;
        cls.trace.steps.push_back(std::move(step));
        s = normalized(s, r);
    };

    note_normalize(seq);
    for (;;) {
        const Index r = static_cast<Index>(seq.size());
        if (r == 1) {
            cls.outcome = seq[0] == 1 ? Outcome::finite : Outcome::infinite;
            break;
        }
        if (r == 2 && (seq[0] == 1 || seq[1] == 1)) {
            long long a = std::max(seq[0], seq[1]);
            cls.outcome = (a <= 3) ? Outcome::finite : Outcome::infinite;
            break;
        }
        if (all_at_least_two(seq)) {
            cls.outcome = Outcome::infinite;
            break;
        }
        if (has_adjacent_ones(seq)) {
            cls.outcome = Outcome::not_a_frieze;
            break;
        }
        Index k = 0;
        while (seq[static_cast<std::size_t>(k)] != 1) ++k;
        ReductionStep step;
        step.kind = ReductionStep::Kind::reduce;
        step.before = seq;
        step.index = k;
        cls.trace.steps.push_back(std::move(step));

        std::vector<long long> next;
        next.reserve(seq.size() - 1);
        for (Index i = 0; i < r; ++i)
            if (i != k) next.push_back(seq[static_cast<std::size_t>(i)]);
        // After dropping position k the cyclic neighbours sit at k-1 and k
        // in the shortened sequence.
        const Index len = r - 1;
        next[static_cast<std::size_t>(((k - 1) % len + len) % len)] -= 1;
        next[static_cast<std::size_t>(k % len)] -= 1;
        seq = std::move(next);
        note_normalize(seq);
    }
    cls.trace.base = seq;

    if (cls.outcome == Outcome::finite) {
        // Replaying the trace backwards, each undone reduction inserts one
        // ear per bookkeeping period into the current polygon, which is only
        // possible when the period divides the polygon order. A sequence
        // whose replay fails this, such as (2,1,2) via (1,1), is not the
        // quiddity row of any frieze even though the reduction bottoms out
        // in a finite base.
        Index order = finite_base_order(seq);
        for (auto it = cls.trace.steps.rbegin(); it != cls.trace.steps.rend(); ++it) {
            if (it->kind != ReductionStep::Kind::reduce) continue;
            const Index len = static_cast<Index>(it->before.size()) - 1;
            if (order % len != 0) {
                cls.outcome = Outcome::not_a_frieze;
                break;
            }
            order += order / len;
        }
        if (cls.outcome == Outcome::finite) cls.polygon_order = order;
    }

    switch (cls.outcome) {
    case Outcome::finite: {
        Index scanned = polygon_order_of(entries);
        if (scanned != cls.polygon_order)
            throw std::logic_error("trace replay and row scan disagree on the polygon order");
        cls.witness = realize_polygon_impl(entries, cls.polygon_order);
        break;
    }
    case Outcome::infinite: {
        Index mult = 1;
        for (const ReductionStep& step : cls.trace.steps)
            if (step.kind == ReductionStep::Kind::normalize) mult *= step.factor;
        cls.minimal_inner_points = mult * minimal_inner_points_of_base(seq);
        break;
    }
    case Outcome::not_a_frieze:
        cls.rejection_witness = find_rejection_witness(entries);
        break;
    }
    return cls;
}

Index minimal_inner_points(const std::vector<long long>& entries) {
    Classification cls = classify(entries);
    if (cls.outcome != Outcome::infinite)
        throw std::invalid_argument("minimal_inner_points needs an infinite classification");
    return cls.minimal_inner_points;
}

Index polygon_order(const std::vector<long long>& entries) {
    Classification cls = classify(entries);
    if (cls.outcome != Outcome::finite)
        throw std::invalid_argument("polygon_order needs a finite classification");
    return cls.polygon_order;
}

namespace {

TriangulatedPolygon realize_polygon_impl(const std::vector<long long>& entries, Index N) {
    // The witness lives at full polygon length, so expand the periodic row
    // to N entries before running ear reduction.
    const Index n = static_cast<Index>(entries.size());

    struct Vertex {
        Index label;
        long long value;
    };
    std::list<Vertex> poly;
    for (Index i = 0; i < N; ++i)
        poly.push_back({i + 1, entries[static_cast<std::size_t>(i % n)]});

    TriangulatedPolygon result;
    result.n = N;

    auto cyclic_next = [&](std::list<Vertex>::iterator it) {
        auto nx = std::next(it);
        return nx == poly.end() ? poly.begin() : nx;
    };
    auto cyclic_prev = [&](std::list<Vertex>::iterator it) {
        return it == poly.begin() ? std::prev(poly.end()) : std::prev(it);
    };

    while (poly.size() > 3) {
        auto ear = poly.begin();
        while (ear != poly.end() && ear->value != 1) ++ear;
        if (ear == poly.end())
            throw std::logic_error("ear reduction stalled on a finite sequence");
        auto left = cyclic_prev(ear);
        auto right = cyclic_next(ear);
        left->value -= 1;
        right->value -= 1;
        if (left->value < 1 || right->value < 1)
            throw std::logic_error("ear reduction produced a nonpositive entry");
        Index u = left->label, v = right->label;
        result.diagonals.emplace_back(std::min(u, v), std::max(u, v));
        poly.erase(ear);
    }
    for (const auto& v : poly)
        if (v.value != 1) throw std::logic_error("final triangle is not all ones");
    std::sort(result.diagonals.begin(), result.diagonals.end());
    return result;
}

} // namespace

TriangulatedPolygon realize_polygon(const std::vector<long long>& entries) {
    Classification cls = classify(entries);
    if (cls.outcome != Outcome::finite)
        throw std::invalid_argument("realize_polygon needs a finite classification");
    return *cls.witness;
}

} // namespace frieze
