#include "doctest.h"

#include <random>

#include "frieze/annulus.hpp"

using namespace frieze;

namespace {

AnnulusTriangulation a32_asymptotic() {
    // marked points 1,2,3 outer and 4,5 inner; Prufer arcs at the inner
    // boundary coexist with adic arcs at the outer one (all drawn leftward)
    AnnulusTriangulation T;
    T.n = 3;
    T.m = 2;
    T.arcs = {
        Arc::peripheral(Boundary::outer, 2, 1),
        Arc::peripheral(Boundary::inner, 4, 4),
        Arc::asymptotic({Boundary::outer, 1}, Spiral::left),
        Arc::asymptotic({Boundary::outer, 2}, Spiral::left),
        Arc::asymptotic({Boundary::inner, 4}, Spiral::left),
    };
    return T;
}

AnnulusTriangulation a32_bridging() {
    AnnulusTriangulation T;
    T.n = 3;
    T.m = 2;
    T.arcs = {
        Arc::peripheral(Boundary::outer, 1, 3),
        Arc::peripheral(Boundary::inner, 4, 4),
        Arc::bridging(1, 4, 0),
        Arc::bridging(1, 4, 1),
        Arc::bridging(3, 4, 1),
    };
    return T;
}

std::vector<long long> random_infinite(std::mt19937_64& rng, Index max_len) {
    std::uniform_int_distribution<Index> len(1, max_len);
    std::uniform_int_distribution<long long> val(1, 6);
    for (;;) {
        std::vector<long long> entries(static_cast<std::size_t>(len(rng)));
        for (auto& a : entries) a = val(rng);
        if (classify(entries).outcome == Outcome::infinite) return entries;
    }
}

} // namespace

TEST_CASE("cover layout projects its own lifts") {
    CoverLayout cov{3, 2};
    CHECK(cov.width() == 6);
    for (Index i = 1; i <= 3; ++i)
        for (Index k = -2; k <= 2; ++k)
            CHECK(cov.project_lower_index(cov.lower_index(i, k)) == MarkedPoint{Boundary::outer, i});
    for (Index p = 4; p <= 5; ++p)
        for (Index k = -2; k <= 2; ++k)
            CHECK(cov.project_upper_index(cov.upper_index(p, k)) == MarkedPoint{Boundary::inner, p});
    CHECK(cov.lower_x(2, 0) == 2);
    CHECK(cov.upper_x(5, 0) == 3);
    CHECK(cov.lower_x(1, 1) == 6);
}

TEST_CASE("both pictured A_{3,2} triangulations pass") {
    CHECK(check_triangulation(a32_asymptotic()).ok);
    CHECK(check_triangulation(a32_bridging()).ok);
}

TEST_CASE("dropping an arc fails the count") {
    AnnulusTriangulation T = a32_bridging();
    T.arcs.pop_back();
    ValidityReport rep = check_triangulation(T);
    CHECK_FALSE(rep.ok);
    bool mentions_count = false;
    for (const auto& f : rep.failures)
        if (f.find("arc count") != std::string::npos) mentions_count = true;
    CHECK(mentions_count);
}

TEST_CASE("an interleaving bridging arc is flagged with the pair") {
    AnnulusTriangulation T = a32_bridging();
    T.arcs.push_back(Arc::bridging(2, 5, 0));
    ValidityReport rep = check_triangulation(T);
    CHECK_FALSE(rep.ok);
    bool names_pair = false;
    for (const auto& f : rep.failures)
        if (f.find("bridging[2,5]") != std::string::npos && f.find("interleave") != std::string::npos)
            names_pair = true;
    CHECK(names_pair);
}

TEST_CASE("outer quiddity of the pictured triangulations") {
    CHECK(outer_quiddity(a32_asymptotic()) == std::vector<long long>{3, 3, 1});
    CHECK(outer_quiddity(a32_bridging()) == std::vector<long long>{4, 1, 3});
}

TEST_CASE("single adic arc gives the constant-2 row") {
    AnnulusTriangulation T;
    T.n = 1;
    T.m = 0;
    T.arcs = {Arc::asymptotic({Boundary::outer, 1}, Spiral::left)};
    CHECK(check_triangulation(T).ok);
    CHECK(outer_quiddity(T) == std::vector<long long>{2});
}

TEST_CASE("realize the small-period examples") {
    AnnulusTriangulation t14 = realize({1, 4});
    CHECK(t14.n == 2);
    CHECK(t14.m == 0);
    bool loop = false, adic = false;
    for (const Arc& arc : t14.arcs) {
        if (arc.kind == Arc::Kind::peripheral && arc.from == arc.to) loop = true;
        if (arc.kind == Arc::Kind::asymptotic) adic = true;
    }
    CHECK(loop);
    CHECK(adic);

    AnnulusTriangulation t333 = realize({3, 3, 3});
    CHECK(t333.n == 3);
    CHECK(t333.m == 3);
    for (const Arc& arc : t333.arcs) CHECK(arc.kind == Arc::Kind::bridging);

    AnnulusTriangulation t17 = realize({1, 7});
    CHECK(t17.n == 2);
    CHECK(t17.m == 3);
}

TEST_CASE("realize Example 5.6 lands in A_{4,1} with the paper's arcs") {
    AnnulusTriangulation T = realize({4, 1, 5, 1});
    CHECK(T.n == 4);
    CHECK(T.m == 1);
    CHECK(outer_quiddity(T) == std::vector<long long>{4, 1, 5, 1});
    long long peripherals = 0, to5 = 0, from1 = 0, from3 = 0;
    for (const Arc& arc : T.arcs) {
        if (arc.kind == Arc::Kind::peripheral) ++peripherals;
        if (arc.kind == Arc::Kind::bridging) {
            ++to5;
            if (arc.outer_point == 1) ++from1;
            if (arc.outer_point == 3) ++from3;
        }
    }
    CHECK(peripherals == 2);
    CHECK(to5 == 3);
    CHECK(from1 == 1);
    CHECK(from3 == 2);
}

TEST_CASE("realize roundtrip on random infinite sequences") {
    std::mt19937_64 rng(211);
    for (int it = 0; it < 120; ++it) {
        std::vector<long long> entries = random_infinite(rng, 8);
        AnnulusTriangulation T = realize(entries);
        CHECK(check_triangulation(T).ok);
        CHECK(outer_quiddity(T) == entries);
        CHECK(T.m == minimal_inner_points(entries));
        for (const Arc& arc : T.arcs)
            if (arc.kind == Arc::Kind::peripheral) CHECK(arc.boundary == Boundary::outer);
    }
}

TEST_CASE("multiply_period repeats the quiddity") {
    AnnulusTriangulation t14 = realize({1, 4});
    AnnulusTriangulation t3 = multiply_period(t14, 3);
    CHECK(t3.n == 6);
    CHECK(t3.m == 0);
    CHECK(check_triangulation(t3).ok);
    CHECK(outer_quiddity(t3) == std::vector<long long>{1, 4, 1, 4, 1, 4});

    AnnulusTriangulation fan = realize({3});
    AnnulusTriangulation fan2 = multiply_period(fan, 2);
    CHECK(fan2.n == 2);
    CHECK(fan2.m == 2);
    CHECK(check_triangulation(fan2).ok);
    CHECK(outer_quiddity(fan2) == std::vector<long long>{3, 3});

    CHECK(multiply_period(t14, 1).arcs == t14.arcs);

    std::mt19937_64 rng(223);
    for (int it = 0; it < 40; ++it) {
        std::vector<long long> entries = random_infinite(rng, 5);
        AnnulusTriangulation T = realize(entries);
        for (Index s = 2; s <= 3; ++s) {
            AnnulusTriangulation R = multiply_period(T, s);
            CHECK(check_triangulation(R).ok);
            std::vector<long long> expect;
            for (Index c = 0; c < s; ++c)
                expect.insert(expect.end(), entries.begin(), entries.end());
            CHECK(outer_quiddity(R) == expect);
        }
    }
}

TEST_CASE("disc conversions reproduce the pictured quiddities") {
    // the punctured-disc picture with two central arcs and one peripheral
    PuncturedDisc s3;
    s3.n = 3;
    s3.arcs = {
        DiscArc{DiscArc::Kind::peripheral, 1, 3, 0},
        DiscArc{DiscArc::Kind::central, 0, 0, 1},
        DiscArc{DiscArc::Kind::central, 0, 0, 3},
    };
    CHECK(check_disc(s3).ok);
    AnnulusTriangulation a30 = disc_to_annulus(s3);
    CHECK(a30.m == 0);
    CHECK(check_triangulation(a30).ok);
    CHECK(outer_quiddity(a30) == std::vector<long long>{3, 1, 3});
    PuncturedDisc back = annulus0_to_disc(a30);
    std::sort(s3.arcs.begin(), s3.arcs.end());
    CHECK(back.arcs == s3.arcs);
    CHECK(disc_quiddity(back) == std::vector<long long>{3, 1, 3});

    // the five-point punctured disc with quiddity (6,3,1,3,1)
    PuncturedDisc s5;
    s5.n = 5;
    s5.arcs = {
        DiscArc{DiscArc::Kind::central, 0, 0, 1},
        DiscArc{DiscArc::Kind::peripheral, 1, 1, 0},
        DiscArc{DiscArc::Kind::peripheral, 4, 1, 0},
        DiscArc{DiscArc::Kind::peripheral, 2, 1, 0},
        DiscArc{DiscArc::Kind::peripheral, 2, 4, 0},
    };
    CHECK(check_disc(s5).ok);
    AnnulusTriangulation a50 = disc_to_annulus(s5);
    CHECK(check_triangulation(a50).ok);
    CHECK(outer_quiddity(a50) == std::vector<long long>{6, 3, 1, 3, 1});
}

TEST_CASE("asymptotic reduction") {
    AnnulusTriangulation already = a32_asymptotic();
    AnnulusTriangulation red = asymptotic_reduction(already);
    CHECK(red.m == 0);
    CHECK(check_triangulation(red).ok);
    // outer arcs unchanged: the peripheral and the two adic arcs survive
    CHECK(outer_quiddity(red) == std::vector<long long>{3, 3, 1});

    AnnulusTriangulation fan = realize({3, 3, 3});
    AnnulusTriangulation fred = asymptotic_reduction(fan);
    CHECK(fred.m == 0);
    CHECK(outer_quiddity(fred) == std::vector<long long>{2, 2, 2});

    AnnulusTriangulation right = a32_bridging();
    AnnulusTriangulation rred = asymptotic_reduction(right);
    CHECK(outer_quiddity(rred) == std::vector<long long>{3, 1, 3});
    long long peripherals = 0, adics = 0;
    for (const Arc& arc : rred.arcs) {
        if (arc.kind == Arc::Kind::peripheral) ++peripherals;
        if (arc.kind == Arc::Kind::asymptotic) ++adics;
    }
    CHECK(peripherals == 1);
    CHECK(adics == 2);
}

TEST_CASE("asymptotic reduction matches the degree formula on random realizations") {
    std::mt19937_64 rng(307);
    for (int it = 0; it < 100; ++it) {
        std::vector<long long> entries = random_infinite(rng, 7);
        AnnulusTriangulation T = realize(entries);
        AnnulusTriangulation R = asymptotic_reduction(T);
        std::vector<long long> a = outer_quiddity(T);
        std::vector<long long> b = outer_quiddity(R);
        for (Index i = 1; i <= T.n; ++i) {
            long long r = bridging_degree(T, i);
            CHECK(b[static_cast<std::size_t>(i - 1)] ==
                  a[static_cast<std::size_t>(i - 1)] - std::max(r - 1, 0LL));
        }
        CHECK(classify(b).outcome == Outcome::infinite);
    }
}

TEST_CASE("bump realization case by case") {
    // asymptotic arc at j
    AnnulusTriangulation allAdic = realize({2, 2, 2});
    AnnulusTriangulation b3 = bump_realization(allAdic, 2);
    CHECK(b3.n == 3);
    CHECK(b3.m == 1);
    CHECK(outer_quiddity(b3) == std::vector<long long>{2, 3, 2});

    // exactly one bridging arc at j, the worked example of the paper
    AnnulusTriangulation t4151 = realize({4, 1, 5, 1});
    AnnulusTriangulation b2 = bump_realization(t4151, 1);
    CHECK(outer_quiddity(b2) == std::vector<long long>{5, 1, 5, 1});
    CHECK(b2.n == 4);
    CHECK(b2.m == 2);

    // two bridging arcs at j closed by a boundary segment
    AnnulusTriangulation b1seg = bump_realization(t4151, 3);
    CHECK(outer_quiddity(b1seg) == std::vector<long long>{4, 1, 6, 1});

    // no bridging or asymptotic arc at j, under one arch
    AnnulusTriangulation bA = bump_realization(t4151, 2);
    CHECK(outer_quiddity(bA) == std::vector<long long>{4, 2, 5, 1});

    // arch over j in an asymptotic picture: rebuilt from scratch
    AnnulusTriangulation t14 = realize({1, 4});
    AnnulusTriangulation bAasym = bump_realization(t14, 1);
    CHECK(outer_quiddity(bAasym) == std::vector<long long>{2, 4});
}

TEST_CASE("bump realization flips an inner arc when one closes the fan") {
    AnnulusTriangulation T;
    T.n = 2;
    T.m = 2;
    T.arcs = {
        Arc::peripheral(Boundary::inner, 4, 4),
        Arc::bridging(1, 4, 0),
        Arc::bridging(2, 4, 0),
        Arc::bridging(2, 4, 1),
    };
    REQUIRE(check_triangulation(T).ok);
    REQUIRE(outer_quiddity(T) == std::vector<long long>{2, 3});
    AnnulusTriangulation R = bump_realization(T, 2);
    CHECK(outer_quiddity(R) == std::vector<long long>{2, 4});
    CHECK(R.m == 2); // flip, no new vertex
    for (const Arc& arc : R.arcs) CHECK(arc.kind == Arc::Kind::bridging);
}

TEST_CASE("bump realization property sweep") {
    std::mt19937_64 rng(401);
    for (int it = 0; it < 60; ++it) {
        std::vector<long long> entries = random_infinite(rng, 6);
        AnnulusTriangulation T = realize(entries);
        std::uniform_int_distribution<Index> pick(1, T.n);
        Index j = pick(rng);
        AnnulusTriangulation R = bump_realization(T, j);
        std::vector<long long> expect = entries;
        expect[static_cast<std::size_t>(j - 1)] += 1;
        CHECK(outer_quiddity(R) == expect);
        CHECK(check_triangulation(R).ok);
        CHECK(classify(outer_quiddity(R)).outcome == Outcome::infinite);
    }
}

TEST_CASE("iterated bumps keep producing valid triangulations") {
    std::mt19937_64 rng(409);
    for (int it = 0; it < 25; ++it) {
        std::vector<long long> entries = random_infinite(rng, 5);
        AnnulusTriangulation T = realize(entries);
        for (int step = 0; step < 3; ++step) {
            std::uniform_int_distribution<Index> pick(1, T.n);
            Index j = pick(rng);
            T = bump_realization(T, j);
            entries[static_cast<std::size_t>(j - 1)] += 1;
            CHECK(outer_quiddity(T) == entries);
        }
    }
}
