#ifndef DCX_CURVE_HPP
#define DCX_CURVE_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dcx/errors.hpp"
#include "dcx/layout.hpp"

namespace dcx {

/// Intersection point of a curve with the shadow circle: the idx-th point
/// along segment seg, counted from v_seg toward v_{seg+1}.
struct Pt {
    int seg = 0;
    int idx = 0;
    friend bool operator==(const Pt&, const Pt&) = default;
    friend auto operator<=>(const Pt&, const Pt&) = default;
};

using Chord = std::array<Pt, 2>;

inline Chord make_chord(Pt a, Pt b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

/// Exact encoding of a simple closed curve on the (2n+2)-punctured sphere:
/// per-segment intersection weights plus the two non-crossing perfect
/// matchings giving the curve's arcs in the inner and outer face of the
/// shadow circle.
struct Curve {
    int n = 0;
    std::vector<int> weights;  // size 2n+2
    std::vector<Chord> inner;
    std::vector<Chord> outer;

    int seg_count() const { return 2 * n + 2; }
    int total_weight() const {
        int s = 0;
        for (int w : weights) s += w;
        return s;
    }
};

enum class Face { Inner, Outer };

namespace detail {

/// Flat view of a curve: points numbered 0..m-1 in circle order, partner
/// arrays per face. Built once, then used by trace/tighten/word routines.
struct FlatCurve {
    int S = 0;                     // segment count
    std::vector<int> offset;       // offset[s] = first flat index on segment s
    std::vector<int> seg_of;       // flat index -> segment
    std::vector<int> inner_p;      // flat partner in inner face
    std::vector<int> outer_p;      // flat partner in outer face
    int m = 0;

    int flat(Pt p) const { return offset[p.seg] + p.idx; }
    Pt point(int f) const {
        int s = seg_of[f];
        return {s, f - offset[s]};
    }
};

inline FlatCurve flatten(const Curve& c) {
    FlatCurve fc;
    fc.S = c.seg_count();
    check((int)c.weights.size() == fc.S, Errc::Malformed, "weights length != 2n+2");
    fc.offset.resize(fc.S + 1, 0);
    for (int s = 0; s < fc.S; ++s) {
        check(c.weights[s] >= 0, Errc::Malformed, "negative weight");
        fc.offset[s + 1] = fc.offset[s] + c.weights[s];
    }
    fc.m = fc.offset[fc.S];
    fc.seg_of.resize(fc.m);
    for (int s = 0; s < fc.S; ++s)
        for (int k = fc.offset[s]; k < fc.offset[s + 1]; ++k) fc.seg_of[k] = s;
    fc.inner_p.assign(fc.m, -1);
    fc.outer_p.assign(fc.m, -1);

    auto fill = [&](const std::vector<Chord>& chords, std::vector<int>& partner) {
        for (const auto& ch : chords) {
            for (const Pt& p : ch) {
                check(p.seg >= 0 && p.seg < fc.S && p.idx >= 0 && p.idx < c.weights[p.seg],
                      Errc::Malformed, "chord endpoint out of range");
            }
            int a = fc.flat(ch[0]), b = fc.flat(ch[1]);
            check(a != b, Errc::Malformed, "degenerate chord");
            check(partner[a] == -1 && partner[b] == -1, Errc::UnmatchedPoint,
                  "point matched twice in one face");
            partner[a] = b;
            partner[b] = a;
        }
    };
    fill(c.inner, fc.inner_p);
    fill(c.outer, fc.outer_p);
    return fc;
}

/// Non-crossing test for one face, linear stack scan over circle order.
inline bool non_crossing(const std::vector<int>& partner) {
    std::vector<int> stack;
    for (int p = 0; p < (int)partner.size(); ++p) {
        if (!stack.empty() && partner[stack.back()] == p)
            stack.pop_back();
        else
            stack.push_back(p);
    }
    return stack.empty();
}

/// Number of closed components traced by alternating inner/outer partners.
inline int component_count(const FlatCurve& fc) {
    std::vector<bool> seen(fc.m, false);
    int comps = 0;
    for (int start = 0; start < fc.m; ++start) {
        if (seen[start]) continue;
        ++comps;
        int p = start;
        Face f = Face::Inner;
        do {
            seen[p] = true;
            p = (f == Face::Inner) ? fc.inner_p[p] : fc.outer_p[p];
            seen[p] = true;
            f = (f == Face::Inner) ? Face::Outer : Face::Inner;
        } while (p != start || f != Face::Inner);
    }
    return comps;
}

/// Traversal order of a single-component curve: flat point ids, with the
/// arc leaving position t lying in face Inner for even t, Outer for odd t.
inline std::vector<int> trace_cycle(const FlatCurve& fc) {
    std::vector<int> seq;
    seq.reserve(fc.m);
    int p = 0;
    Face f = Face::Inner;
    do {
        seq.push_back(p);
        p = (f == Face::Inner) ? fc.inner_p[p] : fc.outer_p[p];
        f = (f == Face::Inner) ? Face::Outer : Face::Inner;
    } while (p != 0 || f != Face::Inner);
    require_internal((int)seq.size() == fc.m, "trace did not cover all points");
    return seq;
}

} // namespace detail

/// Check all Curve invariants (matching completeness, non-crossing chords,
/// connectedness). Returns the checked value unchanged.
inline Curve validate(const Curve& c) {
    check(c.n >= 1, Errc::Malformed, "n must be >= 1");
    auto fc = detail::flatten(c);
    check(fc.m > 0, Errc::EmptyCurve, "all weights zero");
    for (int p = 0; p < fc.m; ++p) {
        check(fc.inner_p[p] >= 0, Errc::UnmatchedPoint, "point unmatched in inner face");
        check(fc.outer_p[p] >= 0, Errc::UnmatchedPoint, "point unmatched in outer face");
    }
    check(detail::non_crossing(fc.inner_p), Errc::CrossingChords, "inner chords cross");
    check(detail::non_crossing(fc.outer_p), Errc::CrossingChords, "outer chords cross");
    check(detail::component_count(fc) == 1, Errc::MultiComponent, "not a single closed curve");
    return c;
}

/// Remove bigons against the shadow circle: repeatedly delete a chord
/// joining two adjacent points of the same segment and splice the
/// opposite-face partners. Result is the taut (bigon-free) form, isotopic
/// to the input. Throws EmptyCurve if the input was a trivial loop that
/// vanishes entirely.
inline Curve tighten(const Curve& input) {
    Curve c = input;
    for (;;) {
        auto fc = detail::flatten(c);
        // Innermost circle-bigon = chord joining circle-adjacent points of
        // one segment; scan by lowest segment index.
        int a = -1, b = -1;
        Face face{};
        for (int p = 0; p + 1 < fc.m && a < 0; ++p) {
            if (fc.seg_of[p] != fc.seg_of[p + 1]) continue;
            if (fc.inner_p[p] == p + 1) { a = p; b = p + 1; face = Face::Inner; }
            else if (fc.outer_p[p] == p + 1) { a = p; b = p + 1; face = Face::Outer; }
        }
        if (a < 0) return c;

        const auto& other_p = face == Face::Inner ? fc.outer_p : fc.inner_p;
        int x = other_p[a], y = other_p[b];
        if (x == b) {
            // The two points also pair in the other face: a null component.
            throw Error(Errc::EmptyCurve, "curve is a trivial loop (vanishes under tighten)");
        }

        int seg = fc.seg_of[a];
        auto drop = [&](Pt p) -> Pt {
            require_internal(!(p.seg == seg && (p.idx == fc.point(a).idx || p.idx == fc.point(b).idx)),
                             "tighten: dangling reference to removed point");
            if (p.seg == seg && p.idx > fc.point(b).idx) p.idx -= 2;
            return p;
        };

        Curve next;
        next.n = c.n;
        next.weights = c.weights;
        next.weights[seg] -= 2;
        Pt pa = fc.point(a), pb = fc.point(b);
        const auto& same_face_chords = face == Face::Inner ? c.inner : c.outer;
        const auto& other_face_chords = face == Face::Inner ? c.outer : c.inner;
        std::vector<Chord> same_out, other_out;
        for (const auto& ch : same_face_chords) {
            if ((ch[0] == pa && ch[1] == pb) || (ch[0] == pb && ch[1] == pa)) continue;
            same_out.push_back(make_chord(drop(ch[0]), drop(ch[1])));
        }
        Pt px = fc.point(x), py = fc.point(y);
        for (const auto& ch : other_face_chords) {
            bool touches_a = ch[0] == pa || ch[1] == pa;
            bool touches_b = ch[0] == pb || ch[1] == pb;
            if (touches_a || touches_b) continue;
            other_out.push_back(make_chord(drop(ch[0]), drop(ch[1])));
        }
        other_out.push_back(make_chord(drop(px), drop(py)));
        if (face == Face::Inner) {
            next.inner = std::move(same_out);
            next.outer = std::move(other_out);
        } else {
            next.outer = std::move(same_out);
            next.inner = std::move(other_out);
        }
        c = std::move(next);
    }
}

inline bool is_taut(const Curve& c) {
    auto same_seg = [](const std::vector<Chord>& chords) {
        for (const auto& ch : chords)
            if (ch[0].seg == ch[1].seg) return true;
        return false;
    };
    return !same_seg(c.inner) && !same_seg(c.outer);
}

/// The two complementary puncture sets. The side containing v_0 is listed
/// first; walking the circle from v_0, the side flips at every curve point,
/// so membership is a parity of weight prefix sums.
inline std::pair<std::vector<int>, std::vector<int>> puncture_partition(const Curve& c) {
    std::pair<std::vector<int>, std::vector<int>> out;
    int parity = 0;
    for (int j = 0; j < c.seg_count(); ++j) {
        (parity == 0 ? out.first : out.second).push_back(j);
        parity ^= c.weights[j] & 1;
    }
    require_internal(parity == 0, "odd total weight");
    return out;
}

/// Essential = at least two punctures on each side.
inline bool is_essential(const Curve& c) {
    auto [a, b] = puncture_partition(c);
    return a.size() >= 2 && b.size() >= 2;
}

/// Canonical identity key of a (taut) encoding. Positions are intrinsic to
/// the encoding, so a plain sorted serialization is canonical.
inline std::string canonical_key(const Curve& c) {
    std::vector<Chord> in = c.inner, out = c.outer;
    for (auto& ch : in) ch = make_chord(ch[0], ch[1]);
    for (auto& ch : out) ch = make_chord(ch[0], ch[1]);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    std::string key = "n" + std::to_string(c.n) + ";w";
    for (int w : c.weights) key += std::to_string(w) + ",";
    auto emit = [&key](const std::vector<Chord>& chords, char tag) {
        key += tag;
        for (const auto& ch : chords) {
            key += '(' + std::to_string(ch[0].seg) + '.' + std::to_string(ch[0].idx) + '-' +
                   std::to_string(ch[1].seg) + '.' + std::to_string(ch[1].idx) + ')';
        }
    };
    emit(in, 'I');
    emit(out, 'O');
    return key;
}

/// Boundary of a regular neighborhood of a contiguous segment arc: weight 1
/// on the two segments flanking the arc, one chord in each face.
inline Curve arc_neighborhood_curve(const BridgeLayout& L, const SegArc& arc) {
    int S = L.seg_count();
    check(arc.len >= 1 && arc.len <= S - 2, Errc::Malformed, "arc must be proper");
    int before = (arc.start + S - 1) % S;
    int after = (arc.start + arc.len) % S;
    require_internal(before != after, "arc too long for a neighborhood curve");
    Curve c;
    c.n = L.n;
    c.weights.assign(S, 0);
    c.weights[before] = 1;
    c.weights[after] = 1;
    Chord ch = make_chord({before, 0}, {after, 0});
    c.inner = {ch};
    c.outer = {ch};
    return validate(c);
}

/// Disk region E bounded by a reference-style curve: the punctures it
/// encloses plus its boundary curve.
struct Region {
    Curve boundary;
    std::vector<int> punctures_inside;
    int index = 0;
    Sign side = Sign::Plus;
};

/// Boundary curve of D_i^{side} (Figure-2 style reference curves).
inline Curve reference_curve(const BridgeLayout& L, int i, Sign side) {
    return arc_neighborhood_curve(L, reference_arc(L, i, side));
}

inline Region reference_region(const BridgeLayout& L, int i, Sign side) {
    SegArc arc = reference_arc(L, i, side);
    Region r;
    r.boundary = reference_curve(L, i, side);
    r.punctures_inside = arc.punctures(L.seg_count());
    std::sort(r.punctures_inside.begin(), r.punctures_inside.end());
    require_internal((int)r.punctures_inside.size() == 2 * i, "region must enclose 2i punctures");
    r.index = i;
    r.side = side;
    return r;
}

} // namespace dcx

#endif
