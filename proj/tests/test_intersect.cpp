#include <catch2/catch_amalgamated.hpp>

#include "dcx/intersect.hpp"

using namespace dcx;

TEST_CASE("self intersection vanishes (exercises bigon removal)") {
    for (int n = 1; n <= 3; ++n) {
        auto L = build_layout(n);
        for (int i = 1; i <= n; ++i)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                auto c = reference_curve(L, i, s);
                REQUIRE(geometric_intersection(c, c) == 0);
                REQUIRE(is_isotopic(c, c));
            }
    }
}

TEST_CASE("reference intersection matrix n=1..3") {
    for (int n = 1; n <= 3; ++n) {
        auto L = build_layout(n);
        for (int i = 1; i <= n; ++i)
            for (Sign si : {Sign::Plus, Sign::Minus})
                for (int j = 1; j <= n; ++j)
                    for (Sign sj : {Sign::Plus, Sign::Minus}) {
                        auto a = reference_curve(L, i, si);
                        auto b = reference_curve(L, j, sj);
                        int expect = (i == j && si != sj) ? 2 : (i == j ? 0 : 0);
                        INFO("n=" << n << " (" << i << sign_name(si) << "," << j
                                  << sign_name(sj) << ")");
                        REQUIRE(geometric_intersection(a, b) == expect);
                    }
    }
}

TEST_CASE("intersection is symmetric") {
    auto L = build_layout(2);
    auto a = reference_curve(L, 1, Sign::Plus);
    auto b = reference_curve(L, 1, Sign::Minus);
    REQUIRE(geometric_intersection(a, b) == geometric_intersection(b, a));
    REQUIRE(geometric_intersection(a, b) == 2);
}

TEST_CASE("non-taut inputs are tautened first") {
    // Finger of ∂D_1^- pushed across s_1 still meets ∂D_1^+ twice.
    Curve c;
    c.n = 1;
    c.weights = {1, 2, 1, 0};
    c.inner = {make_chord({0, 0}, {1, 0}), make_chord({1, 1}, {2, 0})};
    c.outer = {make_chord({0, 0}, {2, 0}), make_chord({1, 0}, {1, 1})};
    auto L = build_layout(1);
    REQUIRE(geometric_intersection(c, reference_curve(L, 1, Sign::Plus)) == 2);
    REQUIRE(geometric_intersection(c, reference_curve(L, 1, Sign::Minus)) == 0);
    REQUIRE(is_isotopic(c, reference_curve(L, 1, Sign::Minus)));
}

TEST_CASE("isotopy needs matching partitions") {
    auto L = build_layout(2);
    auto a = reference_curve(L, 1, Sign::Plus); // {v_0,v_1} vs rest
    auto b = reference_curve(L, 2, Sign::Plus); // disjoint from a but different split
    REQUIRE(geometric_intersection(a, b) == 0);
    REQUIRE(!is_isotopic(a, b));
}

TEST_CASE("region side examples") {
    auto L = build_layout(2);
    auto E2 = reference_region(L, 2, Sign::Minus); // E_2, bounded by ∂D_2^-
    REQUIRE(region_side(reference_curve(L, 1, Sign::Plus), E2) == RegionSide::Inside);
    REQUIRE(region_side(reference_curve(L, 2, Sign::Plus), E2) == RegionSide::Crossing);
    REQUIRE(region_side(reference_curve(L, 2, Sign::Minus), E2) == RegionSide::Inside);
}

TEST_CASE("region side outside") {
    // n=3: ∂D_3^+ splits off {v_0..v_5}... check something clearly astride E_2.
    auto L = build_layout(3);
    auto E2 = reference_region(L, 2, Sign::Minus);
    auto d3p = reference_curve(L, 3, Sign::Plus);
    auto side = region_side(d3p, E2);
    REQUIRE(side != RegionSide::Inside);
}
