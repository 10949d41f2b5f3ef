#include <catch2/catch_amalgamated.hpp>

#include "dcx/layout.hpp"

using namespace dcx;

static std::string label_str(const SegmentLabel& l) {
    return std::string("b") + std::to_string(l.bridge) + (l.side == SegSide::Upper ? "+" : "-");
}

static std::vector<std::string> label_strings(const BridgeLayout& L) {
    std::vector<std::string> out;
    for (const auto& s : L.segments) out.push_back(label_str(s));
    return out;
}

TEST_CASE("layout n=1") {
    auto L = build_layout(1);
    REQUIRE(L.puncture_count == 4);
    REQUIRE(label_strings(L) == std::vector<std::string>{"b1+", "b1-", "b2+", "b2-"});
}

TEST_CASE("layout n=2") {
    auto L = build_layout(2);
    REQUIRE(L.puncture_count == 6);
    REQUIRE(label_strings(L) ==
            std::vector<std::string>{"b1+", "b1-", "b2+", "b3-", "b3+", "b2-"});
}

TEST_CASE("layout n=3") {
    auto L = build_layout(3);
    REQUIRE(label_strings(L) ==
            std::vector<std::string>{"b1+", "b1-", "b2+", "b3-", "b4+", "b4-", "b3+", "b2-"});
}

TEST_CASE("layout invariants across n") {
    for (int n = 1; n <= 8; ++n) {
        auto L = build_layout(n);
        REQUIRE((int)L.segments.size() == 2 * n + 2);
        // Sides alternate around the circle.
        for (int j = 0; j < L.seg_count(); ++j)
            REQUIRE(L.segments[j].side != L.segments[L.next_seg(j)].side);
        // Every bridge appears exactly once per side.
        std::vector<int> upper(n + 2, 0), lower(n + 2, 0);
        for (const auto& s : L.segments)
            (s.side == SegSide::Upper ? upper : lower)[s.bridge]++;
        for (int b = 1; b <= n + 1; ++b) {
            REQUIRE(upper[b] == 1);
            REQUIRE(lower[b] == 1);
        }
        // shadow_segment inverts the labeling.
        for (int j = 0; j < L.seg_count(); ++j) {
            auto lab = L.segments[j];
            Sign sgn = lab.side == SegSide::Upper ? Sign::Plus : Sign::Minus;
            REQUIRE(L.shadow_segment(lab.bridge, sgn) == j);
        }
    }
}

TEST_CASE("pairing and incident segments") {
    auto L = build_layout(2);
    // v_0 and v_1 are the endpoints of s_0 (upper arc of bridge 1).
    REQUIRE(L.pairing(0, Sign::Plus) == 1);
    REQUIRE(L.pairing(1, Sign::Plus) == 1);
    // v_1 and v_2 bound s_1 (lower arc of bridge 1).
    REQUIRE(L.pairing(1, Sign::Minus) == 1);
    REQUIRE(L.pairing(3, Sign::Minus) == 3);
    auto [seg, is_start] = L.incident_segment(1, Sign::Minus);
    REQUIRE(seg == 1);
    REQUIRE(is_start);
}

TEST_CASE("reference arcs match the bridge picture") {
    auto L2 = build_layout(2);
    auto arc = reference_arc(L2, 2, Sign::Minus);
    REQUIRE(arc.start == 5);
    REQUIRE(arc.len == 3);
    REQUIRE(arc.punctures(L2.seg_count()) == std::vector<int>{5, 0, 1, 2});

    auto L1 = build_layout(1);
    auto arc1 = reference_arc(L1, 1, Sign::Minus);
    REQUIRE(arc1.start == 1);
    REQUIRE(arc1.len == 1);

    auto L3 = build_layout(3);
    for (int i = 1; i <= 3; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            auto a = reference_arc(L3, i, s);
            REQUIRE(a.len == 2 * i - 1);
            // The arc is the contiguous hull of the shadows b_1^s .. b_i^s.
            for (int b = 1; b <= i; ++b)
                REQUIRE(a.contains_seg(L3.shadow_segment(b, s), L3.seg_count()));
            // Endpoints of the arc are such shadows (nothing sticks out).
            auto want = s == Sign::Plus ? SegSide::Upper : SegSide::Lower;
            auto first = L3.segments[a.start];
            auto last = L3.segments[(a.start + a.len - 1) % L3.seg_count()];
            REQUIRE(first.side == want);
            REQUIRE(last.side == want);
            REQUIRE(first.bridge <= i);
            REQUIRE(last.bridge <= i);
        }
}
