#include <catch2/catch_amalgamated.hpp>

#include "dcx/complex.hpp"
#include "dcx/json_io.hpp"
#include "matchers.hpp"

using namespace dcx;

TEST_CASE("curve JSON round-trips through validation and canonical form") {
    auto L = build_layout(2);
    for (int i = 1; i <= 2; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            auto c = reference_curve(L, i, s);
            auto back = curve_from_json(curve_to_json(c));
            CHECK(canonical_key(back) == canonical_key(c));
        }
    for (const auto& v : enumerate_vertices(L, 6)) {
        auto back = curve_from_json(curve_to_json(v.curve));
        CHECK(canonical_key(back) == canonical_key(v.curve));
        auto j = vertex_to_json(v);
        CHECK(j["side"] == (v.side == CompressionSide::Above ? "above" : "below"));
        CHECK(canonical_key(curve_from_json(j)) == canonical_key(v.curve));
    }
}

TEST_CASE("malformed curve JSON is rejected with a stable code") {
    auto L = build_layout(2);
    auto good = curve_to_json(reference_curve(L, 1, Sign::Plus));

    CHECK_THROWS_MATCHES(curve_from_json(json::array()), Error, ErrcIs(Errc::Malformed));
    CHECK_THROWS_MATCHES(curve_from_json(json{{"n", 2}}), Error, ErrcIs(Errc::Malformed));

    auto bad = good;
    bad["weights"] = json::array({0, 1, 0});
    CHECK_THROWS_MATCHES(curve_from_json(bad), Error, ErrcIs(Errc::Malformed));

    bad = good;
    bad["inner"] = json::array(); // drops a chord: point counts no longer match
    CHECK_THROWS_AS(curve_from_json(bad), Error);

    bad = good;
    bad["weights"][1] = -1;
    CHECK_THROWS_AS(curve_from_json(bad), Error);
}

TEST_CASE("complex JSON shape is stable") {
    auto L = build_layout(2);
    auto cs = octahedron(L);
    auto j = complex_to_json(cs, homology_ranks(cs, 1));
    REQUIRE(j.contains("vertices"));
    REQUIRE(j.contains("edges"));
    REQUIRE(j.contains("betti"));
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 4);
    CHECK(j["betti"] == json::array({0, 1}));
    for (const auto& e : j["edges"]) {
        REQUIRE(e.size() == 2);
        CHECK(e[0].get<int>() < e[1].get<int>());
    }
}

TEST_CASE("labels and errors serialize by name") {
    CHECK(label_to_json(ClassLabel{3, Sign::Minus}) == json({{"i", 3}, {"side", "-"}}));
    Error e(Errc::Unclassifiable, "probe");
    auto j = error_to_json(e);
    CHECK(j["error"] == "Unclassifiable");
    CHECK(j["message"] == "Unclassifiable: probe");
}

TEST_CASE("emitted JSON is byte-stable across identical runs") {
    auto L = build_layout(2);
    auto once = [&] {
        std::string s;
        for (const auto& v : enumerate_vertices(L, 6)) s += vertex_to_json(v).dump() + "\n";
        return s;
    };
    CHECK(once() == once());
}
