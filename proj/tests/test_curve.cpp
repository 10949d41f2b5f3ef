#include <catch2/catch_amalgamated.hpp>

#include "dcx/curve.hpp"
#include "matchers.hpp"

using namespace dcx;

TEST_CASE("reference curve weights") {
    auto L2 = build_layout(2);
    auto c = reference_curve(L2, 2, Sign::Minus);
    REQUIRE(c.weights == std::vector<int>{0, 0, 1, 0, 1, 0});
    REQUIRE(c.inner.size() == 1);
    REQUIRE(c.outer.size() == 1);

    auto L1 = build_layout(1);
    auto c1 = reference_curve(L1, 1, Sign::Minus);
    REQUIRE(c1.weights == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("validate rejects malformed encodings") {
    Curve c;
    c.n = 1;
    c.weights = {1, 0, 1, 0};
    c.inner = {make_chord({0, 0}, {2, 0})};
    c.outer = {make_chord({0, 0}, {2, 0})};
    REQUIRE_NOTHROW(validate(c));

    SECTION("unmatched point") {
        Curve bad = c;
        bad.outer.clear();
        REQUIRE_THROWS_MATCHES(validate(bad), Error, ErrcIs(Errc::UnmatchedPoint));
    }
    SECTION("wrong weights length") {
        Curve bad = c;
        bad.weights.pop_back();
        REQUIRE_THROWS_MATCHES(validate(bad), Error, ErrcIs(Errc::Malformed));
    }
    SECTION("empty") {
        Curve bad;
        bad.n = 1;
        bad.weights = {0, 0, 0, 0};
        REQUIRE_THROWS_MATCHES(validate(bad), Error, ErrcIs(Errc::EmptyCurve));
    }
    SECTION("crossing chords") {
        Curve bad;
        bad.n = 1;
        bad.weights = {2, 0, 2, 0};
        bad.inner = {make_chord({0, 0}, {2, 0}), make_chord({0, 1}, {2, 1})};
        bad.outer = {make_chord({0, 0}, {2, 1}), make_chord({0, 1}, {2, 0})};
        REQUIRE_THROWS_MATCHES(validate(bad), Error, ErrcIs(Errc::CrossingChords));
    }
    SECTION("two components") {
        Curve bad;
        bad.n = 1;
        bad.weights = {2, 0, 2, 0};
        bad.inner = {make_chord({0, 0}, {2, 1}), make_chord({0, 1}, {2, 0})};
        bad.outer = {make_chord({0, 0}, {2, 1}), make_chord({0, 1}, {2, 0})};
        REQUIRE_THROWS_MATCHES(validate(bad), Error, ErrcIs(Errc::MultiComponent));
    }
}

TEST_CASE("tighten removes circle bigons") {
    // Reference curve for (n=1, i=1, -) with one finger pushed across s_1:
    // extra pair of points on s_1 joined by an outer chord.
    Curve c;
    c.n = 1;
    c.weights = {1, 2, 1, 0};
    c.inner = {make_chord({0, 0}, {1, 0}), make_chord({1, 1}, {2, 0})};
    c.outer = {make_chord({0, 0}, {2, 0}), make_chord({1, 0}, {1, 1})};
    validate(c);
    REQUIRE(!is_taut(c));
    auto t = tighten(c);
    REQUIRE(is_taut(t));
    REQUIRE(t.weights == std::vector<int>{1, 0, 1, 0});
    REQUIRE(canonical_key(t) == canonical_key(reference_curve(build_layout(1), 1, Sign::Minus)));
}

TEST_CASE("tighten kills a trivial loop") {
    // Small circle crossing one segment twice, bounding a disk with no punctures.
    Curve c;
    c.n = 1;
    c.weights = {2, 0, 0, 0};
    c.inner = {make_chord({0, 0}, {0, 1})};
    c.outer = {make_chord({0, 0}, {0, 1})};
    validate(c);
    REQUIRE_THROWS_MATCHES(tighten(c), Error, ErrcIs(Errc::EmptyCurve));
}

TEST_CASE("tighten cascades") {
    // Two successive fingers of the outer arc pushed across s_1.
    Curve c;
    c.n = 1;
    c.weights = {1, 4, 1, 0};
    c.inner = {make_chord({1, 0}, {1, 1}), make_chord({1, 2}, {1, 3}),
               make_chord({0, 0}, {2, 0})};
    c.outer = {make_chord({0, 0}, {1, 0}), make_chord({1, 1}, {1, 2}),
               make_chord({1, 3}, {2, 0})};
    validate(c);
    auto t = tighten(c);
    REQUIRE(t.weights == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("puncture partition") {
    auto L1 = build_layout(1);
    auto d1m = reference_curve(L1, 1, Sign::Minus);
    auto [a, b] = puncture_partition(d1m);
    REQUIRE(a == std::vector<int>{0, 3});
    REQUIRE(b == std::vector<int>{1, 2});

    auto L2 = build_layout(2);
    auto d2m = reference_curve(L2, 2, Sign::Minus);
    auto [p, q] = puncture_partition(d2m);
    REQUIRE(p == std::vector<int>{0, 1, 2, 5});
    REQUIRE(q == std::vector<int>{3, 4});
    REQUIRE(is_essential(d2m));
}

TEST_CASE("inessential curve detected") {
    // Curve cutting off a single puncture v_1.
    Curve c;
    c.n = 1;
    c.weights = {1, 1, 0, 0};
    c.inner = {make_chord({0, 0}, {1, 0})};
    c.outer = {make_chord({0, 0}, {1, 0})};
    validate(c);
    REQUIRE(is_taut(c));
    REQUIRE(!is_essential(c));
}

TEST_CASE("canonical key is order independent") {
    auto L2 = build_layout(2);
    auto c = reference_curve(L2, 2, Sign::Plus);
    Curve d = c;
    std::swap(d.inner[0][0], d.inner[0][1]);
    REQUIRE(canonical_key(c) == canonical_key(d));
}
