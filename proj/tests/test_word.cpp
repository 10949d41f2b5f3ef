#include <catch2/catch_amalgamated.hpp>

#include "dcx/tangle.hpp"
#include "dcx/twist.hpp"
#include "matchers.hpp"

using namespace dcx;

TEST_CASE("free group basics") {
    FreeWord w{{1, 2, -2, -1, 3}};
    REQUIRE(free_reduce(w).letters == std::vector<int>{3});
    FreeWord u{{1, 2, 3, -1}};
    REQUIRE(cyclic_reduce(u).letters == std::vector<int>{2, 3});
    REQUIRE(canonical_cyclic(FreeWord{{2, 3}}) == canonical_cyclic(FreeWord{{3, 2}}));
    REQUIRE(canonical_cyclic(FreeWord{{2, 3}}) == canonical_cyclic(FreeWord{{-3, -2}}));
    REQUIRE(word_str(FreeWord{}) == "1");
}

TEST_CASE("peripheral words of reference curves") {
    auto L = build_layout(2);
    auto w1p = peripheral_word(reference_curve(L, 1, Sign::Plus));
    REQUIRE(canonical_cyclic(w1p) == canonical_cyclic(FreeWord{{1, 2}})); // x_0 x_1
    auto w2m = peripheral_word(reference_curve(L, 2, Sign::Minus));
    REQUIRE(canonical_cyclic(w2m) == canonical_cyclic(FreeWord{{6, 1, 2, 3}})); // x_5 x_0 x_1 x_2
}

TEST_CASE("abelianization indicates one partition side") {
    for (int n = 1; n <= 3; ++n) {
        auto L = build_layout(n);
        for (int i = 1; i <= n; ++i)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                auto c = reference_curve(L, i, s);
                auto ab = abelianization(peripheral_word(c), 2 * n + 2);
                auto [a, b] = puncture_partition(c);
                std::vector<int> hit;
                for (int j = 0; j < 2 * n + 2; ++j) {
                    REQUIRE((ab[j] == 0 || std::abs(ab[j]) == 1));
                    if (ab[j] != 0) hit.push_back(j);
                }
                REQUIRE((hit == a || hit == b));
            }
    }
}

TEST_CASE("sphere relation maps to 1 under meridian substitution") {
    for (int n = 1; n <= 4; ++n) {
        auto L = build_layout(n);
        FreeWord sphere;
        for (int i = 1; i <= 2 * n + 2; ++i) sphere.letters.push_back(i);
        REQUIRE(meridian_image(sphere, L, Sign::Plus).trivial());
        REQUIRE(meridian_image(sphere, L, Sign::Minus).trivial());
    }
}

TEST_CASE("meridian images from the bridge picture") {
    auto L = build_layout(2);
    auto w = peripheral_word(reference_curve(L, 1, Sign::Plus)); // x_0 x_1
    REQUIRE(meridian_image(w, L, Sign::Plus).trivial());
    auto low = canonical_cyclic(meridian_image(w, L, Sign::Minus));
    REQUIRE(low == canonical_cyclic(FreeWord{{-2, 1}})); // l_2^{-1} l_1
    auto w2 = peripheral_word(reference_curve(L, 2, Sign::Minus));
    REQUIRE(meridian_image(w2, L, Sign::Minus).trivial());
    REQUIRE(!meridian_image(w2, L, Sign::Plus).trivial());
}

TEST_CASE("compression sides of reference curves") {
    for (int n = 1; n <= 4; ++n) {
        auto L = build_layout(n);
        for (int i = 1; i <= n; ++i) {
            REQUIRE(compression_side(reference_curve(L, i, Sign::Plus)) ==
                    CompressionSide::Above);
            REQUIRE(compression_side(reference_curve(L, i, Sign::Minus)) ==
                    CompressionSide::Below);
        }
    }
}

TEST_CASE("neighborhood of two bridges compresses nowhere") {
    auto L = build_layout(2);
    auto c = arc_neighborhood_curve(L, {1, 2}); // around s_1, s_2: v_1,v_2,v_3
    REQUIRE(compression_side(c) == CompressionSide::NoCompression);
    REQUIRE_THROWS_MATCHES(make_vertex(c), Error, ErrcIs(Errc::NoCompression));
}

TEST_CASE("inessential curves are rejected") {
    Curve c;
    c.n = 1;
    c.weights = {0, 1, 1, 0}; // cuts off v_2 only
    c.inner = {make_chord({1, 0}, {2, 0})};
    c.outer = {make_chord({1, 0}, {2, 0})};
    REQUIRE_THROWS_MATCHES(compression_side(c), Error, ErrcIs(Errc::InessentialCurve));
}

TEST_CASE("compression side is an isotopy invariant under twists") {
    auto L = build_layout(2);
    auto c = reference_curve(L, 2, Sign::Minus);
    // Lower twists (odd segments) preserve the lower tangle.
    auto t = apply_half_twist(c, 3, +1);
    REQUIRE(compression_side(t) == CompressionSide::Below);
    auto v = make_vertex(t);
    REQUIRE(v.side == CompressionSide::Below);
}

TEST_CASE("sphere quotient canonical form") {
    // x_{2n+1} is eliminated; the full boundary word becomes trivial.
    FreeWord boundary;
    for (int i = 1; i <= 6; ++i) boundary.letters.push_back(i); // n=2: x_0..x_5
    REQUIRE(sphere_quotient_canonical(boundary, 2).trivial());
    auto a = sphere_quotient_canonical(FreeWord{{6}}, 2);
    auto b = sphere_quotient_canonical(FreeWord{{-5, -4, -3, -2, -1}}, 2);
    REQUIRE(a == b);
}
