#include "doctest.h"

#include <functional>
#include <random>

#include "frieze/frieze_core.hpp"
#include "frieze/matchings.hpp"

using namespace frieze;

namespace {

// Independent oracle: assign vertices to distinct incident triangles by
// explicit backtracking.
Int count_matchings_backtrack(const StripTriangulation& T, Index i, Index j) {
    if (j == i - 2) return 0;
    if (j == i - 1) return 1;
    MatchingQuery q = build_matching_query(T, i, j);
    const std::size_t k = static_cast<std::size_t>(j - i + 1);
    std::vector<char> used(q.triangles.size(), 0);
    Int total = 0;
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == k) {
            total += 1;
            return;
        }
        for (std::size_t t = 0; t < q.triangles.size(); ++t) {
            if (used[t] || !q.incidence[v][t]) continue;
            used[t] = 1;
            go(v + 1);
            used[t] = 0;
        }
    };
    go(0);
    return total;
}

} // namespace

TEST_CASE("matching conventions") {
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {2, 2}));
    CHECK(count_matchings(T, 0, -1) == 1);
    CHECK(count_matchings(T, 0, -2) == 0);
    CHECK(count_by_recurrence(T, 0, -1) == 1);
}

TEST_CASE("constant-2 strip reproduces the constant rows") {
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {2, 2, 2, 2}));
    CHECK(count_matchings(T, 0, 3) == 5);
    CHECK(count_by_recurrence(T, 0, 2) == 4);
    for (Index i = -1; i <= 0; ++i)
        for (Index j = i; j - i <= 4 && j <= T.core_hi; ++j)
            CHECK(count_matchings(T, i, j) == j - i + 2);
}

TEST_CASE("constant-3 fan") {
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {3, 3, 3, 3}));
    CHECK(count_matchings(T, 1, 1) == 3);
    CHECK(count_by_recurrence(T, 1, 2) == 8);
    CHECK(count_matchings(T, 1, 2) == 8);
}

TEST_CASE("subset sweep equals backtracking") {
    std::mt19937_64 rng(601);
    std::uniform_int_distribution<Index> len(1, 8);
    std::uniform_int_distribution<long long> val(1, 5);
    int done = 0;
    while (done < 40) {
        std::vector<long long> w(static_cast<std::size_t>(len(rng)));
        for (auto& a : w) a = val(rng);
        StripTriangulation T;
        try {
            T = realize_strip(QuiddityRow::windowed(0, w));
        } catch (const StripError&) {
            continue;
        }
        ++done;
        for (Index i = T.core_lo; i <= T.core_hi; ++i)
            for (Index j = i; j - i <= 5 && j <= T.core_hi; ++j)
                CHECK(count_matchings(T, i, j) == count_matchings_backtrack(T, i, j));
    }
}

TEST_CASE("recurrence route agrees where it applies") {
    std::mt19937_64 rng(607);
    std::uniform_int_distribution<Index> len(1, 8);
    std::uniform_int_distribution<long long> val(2, 6);
    for (int it = 0; it < 30; ++it) {
        std::vector<long long> w(static_cast<std::size_t>(len(rng)));
        for (auto& a : w) a = val(rng);
        StripTriangulation T = realize_strip(QuiddityRow::windowed(0, w));
        REQUIRE(T.lower_arches.empty());
        for (Index i = T.core_lo; i <= T.core_hi; ++i)
            for (Index j = i; j - i <= 6 && j <= T.core_hi; ++j)
                CHECK(count_matchings(T, i, j) == count_by_recurrence(T, i, j));
    }
    StripTriangulation peeled = realize_strip(QuiddityRow::windowed(0, {3, 1, 3}));
    CHECK_THROWS_AS(count_by_recurrence(peeled, 0, 1), std::invalid_argument);
}

TEST_CASE("matching numbers are the frieze entries") {
    StripTriangulation all2 = realize_strip(QuiddityRow::windowed(0, {2, 2, 2}));
    MatchingReport r1 = verify_matching_theorem(all2, -1, 3, 6);
    CHECK(r1.pass);

    StripTriangulation peeled = realize_strip(QuiddityRow::windowed(0, {3, 1, 3}));
    MatchingReport r2 = verify_matching_theorem(peeled, -1, 3, 5);
    CHECK(r2.pass);

    // periodic case through the universal cover, on the central copy
    AnnulusTriangulation A = realize({4, 1, 5, 1});
    StripTriangulation S = unroll_to_strip(A);
    MatchingReport r3 = verify_matching_theorem(S, 0, 3, 5);
    CHECK(r3.pass);
}

TEST_CASE("matching theorem sweep on random windows") {
    std::mt19937_64 rng(613);
    std::uniform_int_distribution<Index> len(1, 8);
    std::uniform_int_distribution<long long> val(1, 5);
    int done = 0;
    while (done < 30) {
        std::vector<long long> w(static_cast<std::size_t>(len(rng)));
        for (auto& a : w) a = val(rng);
        StripTriangulation T;
        try {
            T = realize_strip(QuiddityRow::windowed(0, w));
        } catch (const StripError&) {
            continue;
        }
        ++done;
        MatchingReport rep = verify_matching_theorem(T, T.core_lo, T.core_hi, 6);
        CHECK(rep.pass);
    }
}

TEST_CASE("parallel sweep gives the same answer") {
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {3, 2, 4, 1, 3}));
    MatchingReport serial = verify_matching_theorem(T, T.core_lo, T.core_hi, 6, 1);
    MatchingReport parallel = verify_matching_theorem(T, T.core_lo, T.core_hi, 6, 4);
    CHECK(serial.pass == parallel.pass);
    CHECK(serial.mismatches.size() == parallel.mismatches.size());
}

TEST_CASE("removing the ear relates the counts by the three-case shift") {
    // the peeled triangulation of (3,1,3) against the all-2 strip obtained
    // by cutting the ear at k = 1 and closing the gap
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {3, 1, 3}));
    QuiddityRow reduced = QuiddityRow::windowed(0, {2, 2});
    const Index k = 1;
    auto shifted_i = [&](Index i) { return i <= k ? i : i - 1; };
    auto shifted_j = [&](Index j) { return j < k ? j : j - 1; };
    for (Index i = -1; i <= 3; ++i)
        for (Index j = i; j <= 3; ++j) {
            Int m = count_matchings(T, i, j);
            Index si = shifted_i(i), sj = shifted_j(j);
            Int expect;
            if (i == k + 1)
                expect = entry_extended(reduced, si + 1, sj) + entry_extended(reduced, si, sj);
            else if (j == k - 1)
                expect = entry_extended(reduced, si, sj - 1) + entry_extended(reduced, si, sj);
            else
                expect = entry_extended(reduced, si, sj);
            CHECK(m == expect);
        }
}

TEST_CASE("no unused triangles without upper arcs") {
    StripTriangulation T = realize_strip(QuiddityRow::windowed(0, {4, 1, 3, 2}));
    CHECK(T.upper_arches.empty());
    std::vector<StripTriangle> all = strip_faces(T);
    std::vector<StripTriangle> used = triangles_in_range(T, T.stored_lo + 1, T.stored_hi - 1);
    CHECK(all.size() == used.size());
}
