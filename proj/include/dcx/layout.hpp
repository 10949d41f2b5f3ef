#ifndef DCX_LAYOUT_HPP
#define DCX_LAYOUT_HPP

#include <vector>

#include "dcx/errors.hpp"

namespace dcx {

enum class SegSide { Upper, Lower };

inline const char* seg_side_name(SegSide s) {
    return s == SegSide::Upper ? "upper" : "lower";
}

/// Sign tag for the two balls / bridge families: Plus = upper (+), Minus = lower (-).
enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

struct SegmentLabel {
    SegSide side;
    int bridge; // 1..n+1
};

/// The standard (n+1)-bridge picture of the unknot: 2n+2 punctures on a
/// shadow circle cut into 2n+2 segments, each segment the shadow of one
/// bridge. Segment s_j joins punctures v_j and v_{j+1} (mod 2n+2).
struct BridgeLayout {
    int n = 0;
    int puncture_count = 0; // 2n+2
    std::vector<SegmentLabel> segments;

    int seg_count() const { return puncture_count; }
    int next_seg(int j) const { return (j + 1) % seg_count(); }
    int prev_seg(int j) const { return (j + seg_count() - 1) % seg_count(); }

    /// Index of the segment carrying shadow b_i^{side}.
    int shadow_segment(int bridge, Sign side) const {
        SegSide want = side == Sign::Plus ? SegSide::Upper : SegSide::Lower;
        for (int j = 0; j < seg_count(); ++j)
            if (segments[j].side == want && segments[j].bridge == bridge) return j;
        throw Error(Errc::Malformed, "no such shadow segment");
    }

    /// Bridge index pairing puncture v_p on the given side.
    int pairing(int p, Sign side) const {
        SegSide want = side == Sign::Plus ? SegSide::Upper : SegSide::Lower;
        int j = segments[p % seg_count()].side == want ? p : prev_seg(p);
        require_internal(segments[j].side == want, "pairing: side alternation broken");
        return segments[j].bridge;
    }

    /// The side-labeled segment having puncture v_p as an endpoint, and
    /// whether p is the segment's start (v_j) or end (v_{j+1}).
    std::pair<int, bool> incident_segment(int p, Sign side) const {
        SegSide want = side == Sign::Plus ? SegSide::Upper : SegSide::Lower;
        if (segments[p].side == want) return {p, true};
        int j = prev_seg(p);
        require_internal(segments[j].side == want, "incident_segment: alternation broken");
        return {j, false};
    }
};

/// Build the layout for bridge number n+1 by traversing the adjacency
/// relation of the bridges as a closed walk starting a_1^+ -> a_1^-.
inline BridgeLayout build_layout(int n) {
    check(n >= 1, Errc::Malformed, "n must be >= 1");

    // Node = (bridge 1..n+1, sign). Adjacency: a_1 meets a_1, a_2 opposite;
    // a_i meets a_{i-1}, a_{i+1} opposite (2 <= i <= n); a_{n+1} meets
    // a_n, a_{n+1} opposite.
    auto neighbors = [n](int i) -> std::pair<int, int> {
        if (i == 1) return {1, 2};
        if (i <= n) return {i - 1, i + 1};
        return {n, n + 1}; // i == n+1
    };

    BridgeLayout L;
    L.n = n;
    L.puncture_count = 2 * n + 2;
    L.segments.reserve(L.puncture_count);

    int cur = 1;
    Sign cur_side = Sign::Plus;
    int prev = -1; // bridge index of previous node (opposite side)
    for (int step = 0; step < L.puncture_count; ++step) {
        L.segments.push_back({cur_side == Sign::Plus ? SegSide::Upper : SegSide::Lower, cur});
        auto [na, nb] = neighbors(cur);
        int nxt;
        if (prev < 0) {
            nxt = 1; // fixed start: a_1^+ -> a_1^-
        } else {
            nxt = (na == prev) ? nb : na;
            require_internal(na == prev || nb == prev, "adjacency walk broke");
        }
        prev = cur;
        cur = nxt;
        cur_side = opposite(cur_side);
    }
    require_internal(cur == 1 && cur_side == Sign::Plus, "walk did not close");

    // Invariant: sides alternate, s_0 = b_1^+, s_1 = b_1^-.
    for (int j = 0; j < L.seg_count(); ++j) {
        SegSide want = (j % 2 == 0) ? SegSide::Upper : SegSide::Lower;
        require_internal(L.segments[j].side == want, "upper/lower alternation broken");
    }
    require_internal(L.segments[0].bridge == 1 && L.segments[1].bridge == 1,
                     "walk must start b_1^+, b_1^-");
    return L;
}

/// Contiguous arc of segments along the shadow circle: segments
/// start, start+1, ..., start+len-1 (mod 2n+2).
struct SegArc {
    int start = 0;
    int len = 0;

    bool contains_seg(int j, int total) const {
        int d = ((j - start) % total + total) % total;
        return d < len;
    }
    /// Punctures spanned by the arc, in circle order (len+1 of them).
    std::vector<int> punctures(int total) const {
        std::vector<int> out;
        for (int k = 0; k <= len; ++k) out.push_back((start + k) % total);
        return out;
    }
};

/// The union of shadows defining D_i^{side}: b_1^s, b_1^-s, ..., b_{i-1}^s,
/// b_{i-1}^-s, b_i^s. Postcondition (checked): a contiguous arc of 2i-1
/// segments.
inline SegArc reference_arc(const BridgeLayout& L, int i, Sign side) {
    check(i >= 1 && i <= L.n, Errc::Malformed, "reference index out of range");
    std::vector<bool> in(L.seg_count(), false);
    int count = 0;
    auto add = [&](int bridge, Sign s) {
        int j = L.shadow_segment(bridge, s);
        if (!in[j]) { in[j] = true; ++count; }
    };
    for (int k = 1; k < i; ++k) {
        add(k, side);
        add(k, opposite(side));
    }
    add(i, side);
    require_internal(count == 2 * i - 1, "reference arc: duplicate shadows");

    // Find the unique contiguous run covering the marked segments.
    int S = L.seg_count();
    for (int start = 0; start < S; ++start) {
        bool ok = true;
        for (int k = 0; k < count; ++k)
            if (!in[(start + k) % S]) { ok = false; break; }
        if (ok && !in[(start + S - 1) % S]) {
            SegArc arc{start, count};
            for (int j = 0; j < S; ++j)
                require_internal(in[j] == arc.contains_seg(j, S), "reference arc not contiguous");
            return arc;
        }
    }
    throw Error(Errc::Internal, "reference arc not contiguous");
}

} // namespace dcx

#endif
