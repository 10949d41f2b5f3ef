#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dcx/complex.hpp"

using namespace dcx;

TEST_CASE("n=1 enumeration finds exactly the two reference classes") {
    auto L = build_layout(1);
    auto vs = enumerate_vertices(L, 12);
    REQUIRE(vs.size() == 2);
    std::set<std::string> keys;
    for (const auto& v : vs) keys.insert(canonical_key(v.curve));
    REQUIRE(keys.count(canonical_key(reference_curve(L, 1, Sign::Plus))) == 1);
    REQUIRE(keys.count(canonical_key(reference_curve(L, 1, Sign::Minus))) == 1);
}

TEST_CASE("n=2 enumeration at weight 2 contains all references") {
    auto L = build_layout(2);
    auto vs = enumerate_vertices(L, 2);
    std::set<std::string> keys;
    for (const auto& v : vs) keys.insert(canonical_key(v.curve));
    for (int i = 1; i <= 2; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus})
            REQUIRE(keys.count(canonical_key(reference_curve(L, i, s))) == 1);
    for (const auto& v : vs) REQUIRE(v.side != CompressionSide::NoCompression);
}

TEST_CASE("resource cap reports instead of truncating") {
    auto L = build_layout(2);
    REQUIRE_THROWS_AS(enumerate_vertices(L, 8, 50), Error);
    try {
        enumerate_vertices(L, 8, 50);
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::ResourceCap);
    }
}

TEST_CASE("twist orbit basics") {
    auto L = build_layout(2);
    auto d0 = twist_orbit(L, 0);
    REQUIRE(d0.size() == 4);
    auto d1 = twist_orbit(L, 1);
    auto d2 = twist_orbit(L, 2);
    REQUIRE(d1.size() >= d0.size());
    REQUIRE(d2.size() >= d1.size());
    ReferenceSet refs(2);
    for (const auto& v : d2) REQUIRE_NOTHROW(classify(v, refs));
}

TEST_CASE("octahedron n=2 is a 4-cycle") {
    auto L = build_layout(2);
    auto oct = octahedron(L);
    REQUIRE(oct.vertices.size() == 4);
    REQUIRE(oct.edges.size() == 4);
    auto betti = homology_ranks(oct, 1);
    REQUIRE(betti == std::vector<int>{0, 1});
}

TEST_CASE("octahedron n=3 is the boundary of the solid octahedron") {
    auto L = build_layout(3);
    auto oct = octahedron(L);
    REQUIRE(oct.vertices.size() == 6);
    REQUIRE(oct.edges.size() == 12);
    REQUIRE(oct.simplices[2].size() == 8);
    auto betti = homology_ranks(oct, 2);
    REQUIRE(betti == std::vector<int>{0, 0, 1});
}

TEST_CASE("n=1 complex is disconnected") {
    auto L = build_layout(1);
    auto vs = enumerate_vertices(L, 6);
    auto cs = build_complex(vs, 1);
    REQUIRE(cs.vertices.size() == 2);
    REQUIRE(cs.edges.empty());
    auto betti = homology_ranks(cs, 0);
    REQUIRE(betti == std::vector<int>{1});
}

TEST_CASE("flag property on a small slice") {
    auto L = build_layout(2);
    auto cs = build_complex(twist_orbit(L, 1), 2);
    // Every adjacent pair appears as an edge simplex and every triangle's
    // edges are present.
    std::set<std::vector<int>> edges(cs.simplices[1].begin(), cs.simplices[1].end());
    REQUIRE(edges.size() == cs.edges.size());
    for (const auto& tri : cs.simplices[2]) {
        REQUIRE(edges.count({tri[0], tri[1]}) == 1);
        REQUIRE(edges.count({tri[0], tri[2]}) == 1);
        REQUIRE(edges.count({tri[1], tri[2]}) == 1);
    }
}
