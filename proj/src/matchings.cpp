#include "frieze/matchings.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "frieze/frieze_core.hpp"

namespace frieze {

MatchingQuery build_matching_query(const StripTriangulation& T, Index i, Index j) {
    MatchingQuery q;
    q.i = i;
    q.j = j;
    q.triangles = triangles_in_range(T, i, j);
    q.incidence.assign(static_cast<std::size_t>(j - i + 1),
                       std::vector<char>(q.triangles.size(), 0));
    for (std::size_t t = 0; t < q.triangles.size(); ++t)
        for (const StripVertex& c : q.triangles[t].corners)
            if (!c.upper && c.v >= i && c.v <= j)
                q.incidence[static_cast<std::size_t>(c.v - i)][t] = 1;
    return q;
}

Int count_matchings(const StripTriangulation& T, Index i, Index j) {
    if (j < i - 2) throw std::invalid_argument("count_matchings needs j >= i - 2");
    if (j == i - 2) return 0;
    if (j == i - 1) return 1;
    MatchingQuery q = build_matching_query(T, i, j);
    const int k = static_cast<int>(j - i + 1);
    // g[S] after processing t triangles = number of injective maps from the
    // vertex set S into those triangles; adding one triangle extends every
    // map of S minus one incident vertex.
    std::vector<Int> g(static_cast<std::size_t>(1) << k, 0);
    g[0] = 1;
    for (std::size_t t = 0; t < q.triangles.size(); ++t) {
        unsigned long mask = 0;
        for (int v = 0; v < k; ++v)
            if (q.incidence[static_cast<std::size_t>(v)][t]) mask |= 1ul << v;
        for (std::size_t S = g.size() - 1; S > 0; --S) {
            unsigned long hits = S & mask;
            while (hits) {
                unsigned long bit = hits & (~hits + 1);
                g[S] += g[S & ~bit];
                hits &= hits - 1;
            }
        }
    }
    return g[g.size() - 1];
}

Int count_by_recurrence(const StripTriangulation& T, Index i, Index j) {
    if (!T.lower_arches.empty())
        throw std::invalid_argument(
            "count_by_recurrence needs a triangulation without lower peripheral arcs");
    if (j < i - 2) throw std::invalid_argument("count_by_recurrence needs j >= i - 2");
    if (j == i - 2) return 0;
    if (j == i - 1) return 1;
    std::vector<long long> a = strip_quiddity(T, i, j);
    auto av = [&](Index t) { return a[static_cast<std::size_t>(t - i)]; };
    // M[l] = |M_{l,j}| built from the right end of the range
    std::vector<Int> M(static_cast<std::size_t>(j - i + 1));
    auto mv = [&](Index t) -> Int& { return M[static_cast<std::size_t>(t - i)]; };
    mv(j) = av(j);
    for (Index l = j - 1; l >= i; --l) {
        Int sum = Int(av(l) - 1) * mv(l + 1);
        for (Index t = l + 1; t <= j - 1; ++t) sum += Int(av(t) - 2) * mv(t + 1);
        sum += av(j) - 1;
        mv(l) = sum;
    }
    return mv(i);
}

MatchingReport verify_matching_theorem(const StripTriangulation& T, Index i_lo, Index i_hi,
                                       Index depth, int jobs) {
    MatchingReport report;
    QuiddityRow row = core_row(T);
    std::vector<Index> starts;
    for (Index i = i_lo; i <= i_hi; ++i) starts.push_back(i);

    std::vector<std::vector<MatchingReport::Mismatch>> found(starts.size());
    auto sweep = [&](std::size_t begin, std::size_t step) {
        for (std::size_t s = begin; s < starts.size(); s += step) {
            Index i = starts[s];
            for (Index j = i; j - i <= depth && j <= T.core_hi; ++j) {
                Int counted = count_matchings(T, i, j);
                Int entry = entry_recurrence(row, i, j);
                if (counted != entry) found[s].push_back({i, j, counted, entry});
            }
        }
    };
    if (jobs <= 1) {
        sweep(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back(sweep, static_cast<std::size_t>(w), static_cast<std::size_t>(jobs));
        for (auto& th : pool) th.join();
    }
    for (auto& chunk : found)
        for (auto& mm : chunk) report.mismatches.push_back(mm);
    report.pass = report.mismatches.empty();
    return report;
}

} // namespace frieze
