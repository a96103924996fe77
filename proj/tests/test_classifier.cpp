#include "doctest.h"

#include <numeric>
#include <random>

#include "frieze/classifier.hpp"

using namespace frieze;

namespace {

bool chords_cross(std::pair<Index, Index> a, std::pair<Index, Index> b) {
    auto [u, v] = a;
    auto [x, y] = b;
    return (u < x && x < v && v < y) || (x < u && u < y && y < v);
}

void check_witness(const TriangulatedPolygon& poly, const std::vector<long long>& entries) {
    CHECK(poly.n >= 3);
    CHECK(static_cast<Index>(poly.diagonals.size()) == poly.n - 3);
    for (std::size_t a = 0; a < poly.diagonals.size(); ++a)
        for (std::size_t b = a + 1; b < poly.diagonals.size(); ++b)
            CHECK_FALSE(chords_cross(poly.diagonals[a], poly.diagonals[b]));
    std::vector<long long> expect;
    for (Index i = 0; i < poly.n; ++i)
        expect.push_back(entries[static_cast<std::size_t>(i) % entries.size()]);
    CHECK(poly.quiddity() == expect);
}

// Counting corners: an N-gon triangulation has N - 2 triangles, hence the
// quiddity sums to 3(N - 2). Solving for N gives an arithmetic oracle for
// the polygon order that never touches the frieze rows.
Index polygon_order_oracle(const std::vector<long long>& entries) {
    long long n = static_cast<long long>(entries.size());
    long long sum = std::accumulate(entries.begin(), entries.end(), 0LL);
    long long num = 6 * n;
    long long den = 3 * n - sum;
    REQUIRE(den > 0);
    REQUIRE(num % den == 0);
    return num / den;
}

std::vector<long long> random_tuple(std::mt19937_64& rng, Index max_len, long long lo, long long hi) {
    std::uniform_int_distribution<Index> len(1, max_len);
    std::uniform_int_distribution<long long> val(lo, hi);
    std::vector<long long> entries(static_cast<std::size_t>(len(rng)));
    for (auto& a : entries) a = val(rng);
    return entries;
}

} // namespace

TEST_CASE("small-period table") {
    Classification c1 = classify({1});
    CHECK(c1.outcome == Outcome::finite);
    CHECK(c1.polygon_order == 3);

    Classification c12 = classify({1, 2});
    CHECK(c12.outcome == Outcome::finite);
    CHECK(c12.polygon_order == 4);

    Classification c13 = classify({1, 3});
    CHECK(c13.outcome == Outcome::finite);
    CHECK(c13.polygon_order == 6);

    Classification c14 = classify({1, 4});
    CHECK(c14.outcome == Outcome::infinite);
    CHECK(c14.minimal_inner_points == 0);

    for (long long a = 5; a <= 9; ++a) {
        Classification c = classify({1, a});
        CHECK(c.outcome == Outcome::infinite);
        CHECK(c.minimal_inner_points == a - 4);
    }
}

TEST_CASE("adjacent ones reject") {
    Classification c = classify({2, 1, 1});
    CHECK(c.outcome == Outcome::not_a_frieze);
    auto [i, j] = c.rejection_witness;
    QuiddityRow q = QuiddityRow::periodic({2, 1, 1});
    CHECK(entry_recurrence(q, i, j) <= 0);
    CHECK(j - i <= 3 + 2);
}

TEST_CASE("sequences whose reduction bottoms out in (1,1) are rejected") {
    // (2,1,2) reduces to the all-ones row, but no polygon admits an ear at
    // every second vertex of a triangle; m_{02} = 0 exposes it directly.
    for (const auto& entries :
         {std::vector<long long>{2, 1, 2}, {1, 2, 2}, {2, 2, 1, 2, 2, 1}, {4, 1, 2}}) {
        Classification c = classify(entries);
        QuiddityRow q = QuiddityRow::periodic(entries);
        if (c.outcome == Outcome::not_a_frieze) {
            auto [i, j] = c.rejection_witness;
            CHECK(entry_recurrence(q, i, j) <= 0);
        }
    }
    CHECK(classify({2, 1, 2}).outcome == Outcome::not_a_frieze);
    CHECK(classify({1, 2, 2}).outcome == Outcome::not_a_frieze);
    CHECK(classify({2, 2, 1, 2, 2, 1}).outcome == Outcome::not_a_frieze);
    // (4,1,2) reduces to (3,1), a hexagon base, and the replay stays integral.
    Classification c = classify({4, 1, 2});
    CHECK(c.outcome == Outcome::finite);
    CHECK(c.polygon_order == 9);
}

TEST_CASE("(1,1) normalizes to the triangle") {
    Classification c = classify({1, 1});
    CHECK(c.outcome == Outcome::finite);
    CHECK(c.polygon_order == 3);
    CHECK(c.shortest_period == 1);
}

TEST_CASE("example trace (4,1,5,1)") {
    Classification c = classify({4, 1, 5, 1});
    CHECK(c.outcome == Outcome::infinite);
    CHECK(c.minimal_inner_points == 1);
    CHECK(c.shortest_period == 4);
    REQUIRE(c.trace.steps.size() == 2);
    CHECK(c.trace.steps[0].kind == ReductionStep::Kind::reduce);
    CHECK(c.trace.steps[0].before == std::vector<long long>{4, 1, 5, 1});
    CHECK(c.trace.steps[0].index == 1);
    CHECK(c.trace.steps[1].before == std::vector<long long>{3, 4, 1});
    // base is the all-geq-2 stopping condition with one excess corner
    long long excess = 0;
    for (long long b : c.trace.base) excess += b - 2;
    CHECK(excess == 1);
}

TEST_CASE("(5,1,5,1) folds to its shortest period") {
    Classification c = classify({5, 1, 5, 1});
    CHECK(c.outcome == Outcome::infinite);
    CHECK(c.shortest_period == 2);
    // the inner-point count scales with the folded multiplicity
    CHECK(c.minimal_inner_points == 2);
    CHECK(minimal_inner_points({5, 1}) == 1);
    REQUIRE(!c.trace.steps.empty());
    CHECK(c.trace.steps[0].kind == ReductionStep::Kind::normalize);
    CHECK(c.trace.steps[0].factor == 2);
}

TEST_CASE("minimal inner points formula cases") {
    CHECK(minimal_inner_points({2}) == 0);
    CHECK(minimal_inner_points({1, 7}) == 3);
    CHECK(minimal_inner_points({4, 1, 5, 1}) == 1);
    CHECK(minimal_inner_points({3, 3, 3}) == 3);
    CHECK_THROWS_AS(minimal_inner_points({1, 2}), std::invalid_argument);
}

TEST_CASE("polygon order matches the corner-count oracle") {
    CHECK(polygon_order({1, 2}) == 4);
    CHECK(polygon_order({1, 3}) == 6);
    CHECK(polygon_order({2, 1, 3}) == 6);
    CHECK(polygon_order({3, 1, 4, 1}) == 8);

    std::mt19937_64 rng(101);
    int found = 0;
    while (found < 40) {
        std::vector<long long> entries = random_tuple(rng, 6, 1, 4);
        Classification c = classify(entries);
        if (c.outcome != Outcome::finite) continue;
        ++found;
        CHECK(c.polygon_order == polygon_order_oracle(entries));
    }
}

TEST_CASE("polygon witnesses") {
    check_witness(realize_polygon({1}), {1});
    TriangulatedPolygon square = realize_polygon({1, 2});
    check_witness(square, {1, 2});
    CHECK(square.diagonals == std::vector<std::pair<Index, Index>>{{2, 4}});

    TriangulatedPolygon hexagon = realize_polygon({1, 3});
    check_witness(hexagon, {1, 3});
    CHECK(hexagon.diagonals == std::vector<std::pair<Index, Index>>{{2, 4}, {2, 6}, {4, 6}});

    check_witness(realize_polygon({2, 1, 3}), {2, 1, 3});
    check_witness(realize_polygon({3, 1, 4, 1}), {3, 1, 4, 1});

    std::mt19937_64 rng(131);
    int found = 0;
    while (found < 30) {
        std::vector<long long> entries = random_tuple(rng, 6, 1, 4);
        if (classify(entries).outcome != Outcome::finite) continue;
        ++found;
        check_witness(realize_polygon(entries), entries);
    }
}

TEST_CASE("soundness sweeps") {
    std::mt19937_64 rng(151);
    for (int it = 0; it < 300; ++it) {
        std::vector<long long> entries = random_tuple(rng, 8, 1, 6);
        Classification c = classify(entries);
        QuiddityRow q = QuiddityRow::periodic(entries);
        const Index n = static_cast<Index>(entries.size());
        switch (c.outcome) {
        case Outcome::infinite: {
            FriezeFragment f = fragment(q, 0, n - 1, 20);
            for (Index i = 0; i < n; ++i)
                for (Index j = i; j - i <= 20; ++j)
                    CHECK(f.at(i, j) > 0);
            break;
        }
        case Outcome::finite: {
            const Index N = c.polygon_order;
            FriezeFragment f = fragment(q, 0, n - 1, N - 2);
            for (Index i = 0; i < n; ++i) {
                CHECK(f.at(i, i + N - 3) == 1);
                CHECK(f.at(i, i + N - 2) == 0);
                for (Index j = i - 1; j - i <= N - 3; ++j)
                    CHECK(f.at(i, j) > 0);
            }
            break;
        }
        case Outcome::not_a_frieze: {
            auto [i, j] = c.rejection_witness;
            CHECK(entry_recurrence(q, i, j) <= 0);
            CHECK(j - i <= n + 2);
            break;
        }
        }
    }
}

TEST_CASE("every trace step classifies the same") {
    std::mt19937_64 rng(163);
    for (int it = 0; it < 120; ++it) {
        std::vector<long long> entries = random_tuple(rng, 7, 1, 5);
        Classification c = classify(entries);
        for (const ReductionStep& step : c.trace.steps)
            CHECK(classify(step.before).outcome == c.outcome);
        if (!c.trace.base.empty())
            CHECK(classify(c.trace.base).outcome == c.outcome);
    }
}
