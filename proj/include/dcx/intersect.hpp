#ifndef DCX_INTERSECT_HPP
#define DCX_INTERSECT_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"

namespace dcx {

inline Face opp(Face f) { return f == Face::Inner ? Face::Outer : Face::Inner; }

namespace detail {

/// Overlay of two curves on the same shadow circle. Both curves' circle
/// points live in shared per-segment position orders; curves are cyclic
/// token sequences whose arcs alternate inner/outer face. Intersection is
/// minimized by sliding curve 0 across innermost empty bigons.
struct Overlay {
    static constexpr long long KEY = 1 << 20; // key slots per segment
    int S = 0;
    int n = 0;

    std::vector<int> tok_curve, tok_seg;
    std::vector<char> tok_alive;
    std::vector<std::vector<int>> seg_order;   // alive tokens along each segment
    std::array<std::vector<int>, 2> cyc;       // traversal order per curve
    std::array<Face, 2> face0;                 // face of arc cyc[c][0] -> cyc[c][1]

    std::vector<long long> key; // per token, recomputed by refresh_keys

    long long total_span() const { return (long long)S * KEY; }

    Face arc_face(int c, int t) const {
        return (t % 2 == 0) ? face0[c] : opp(face0[c]);
    }

    int new_token(int curve, int seg) {
        tok_curve.push_back(curve);
        tok_seg.push_back(seg);
        tok_alive.push_back(1);
        return (int)tok_curve.size() - 1;
    }

    void refresh_keys() {
        key.assign(tok_curve.size(), -1);
        for (int s = 0; s < S; ++s)
            for (int r = 0; r < (int)seg_order[s].size(); ++r)
                key[seg_order[s][r]] = (long long)s * KEY + 10 + 2 * r;
    }

    long long puncture_key(int j) const { return (long long)j * KEY; }
    long long star_key() const { return 1; } // just past v_0, hit by nothing

    /// x strictly inside the ccw open interval (a, b) of the circle.
    bool ccw_between(long long a, long long x, long long b) const {
        if (a < b) return a < x && x < b;
        return x > a || x < b;
    }
    long long ccw_dist(long long a, long long x) const {
        long long d = x - a;
        return d >= 0 ? d : d + total_span();
    }
    /// Chords (a1,a2) and (b1,b2) interleave on the circle (face independent).
    bool interleaved(long long a1, long long a2, long long b1, long long b2) const {
        return ccw_between(a1, b1, a2) != ccw_between(a1, b2, a2);
    }

    /// Extract one curve back out of the overlay (for validation).
    Curve extract(int c) const {
        Curve out;
        out.n = n;
        out.weights.assign(S, 0);
        std::vector<int> rank(tok_curve.size(), -1);
        for (int s = 0; s < S; ++s)
            for (int id : seg_order[s])
                if (tok_curve[id] == c) rank[id] = out.weights[s]++;
        const auto& C = cyc[c];
        int sz = (int)C.size();
        for (int t = 0; t < sz; ++t) {
            int u = C[t], v = C[(t + 1) % sz];
            Chord ch = make_chord({tok_seg[u], rank[u]}, {tok_seg[v], rank[v]});
            (arc_face(c, t) == Face::Inner ? out.inner : out.outer).push_back(ch);
        }
        return out;
    }
};

inline Overlay make_overlay(const Curve& A, const Curve& B) {
    require_internal(A.n == B.n, "overlay needs curves at the same n");
    Overlay ov;
    ov.S = A.seg_count();
    ov.n = A.n;
    ov.seg_order.assign(ov.S, {});

    const Curve* curves[2] = {&A, &B};
    std::array<std::vector<int>, 2> tok_of_flat;
    for (int c = 0; c < 2; ++c) {
        auto fc = flatten(*curves[c]);
        tok_of_flat[c].resize(fc.m);
        for (int f = 0; f < fc.m; ++f)
            tok_of_flat[c][f] = ov.new_token(c, fc.seg_of[f]);
        auto seq = trace_cycle(fc);
        for (int f : seq) ov.cyc[c].push_back(tok_of_flat[c][f]);
        ov.face0[c] = Face::Inner; // trace_cycle leaves point 0 through the inner face
    }
    // Initial per-segment order: all of A's points, then all of B's.
    for (int c = 0; c < 2; ++c) {
        auto fc = flatten(*curves[c]);
        for (int s = 0; s < ov.S; ++s)
            for (int k = fc.offset[s]; k < fc.offset[s + 1]; ++k)
                ov.seg_order[s].push_back(tok_of_flat[c][k]);
    }
    ov.refresh_keys();
    return ov;
}

struct Crossing {
    int ta = -1, tb = -1;        // arc indices in curves 0 and 1
    long long da = 0, db = 0;    // ccw distance from the arc's start point
};

/// All transverse crossings plus their cyclic order along each curve.
struct CrossingData {
    std::vector<Crossing> list;
    std::vector<int> aseq, bseq; // crossing ids in traversal order
    std::vector<int> apos, bpos; // inverse of the above
};

inline CrossingData find_crossings(const Overlay& ov) {
    CrossingData cd;
    int szA = (int)ov.cyc[0].size(), szB = (int)ov.cyc[1].size();
    for (int ta = 0; ta < szA; ++ta) {
        long long a1 = ov.key[ov.cyc[0][ta]];
        long long a2 = ov.key[ov.cyc[0][(ta + 1) % szA]];
        Face fa = ov.arc_face(0, ta);
        for (int tb = 0; tb < szB; ++tb) {
            if (ov.arc_face(1, tb) != fa) continue;
            long long b1 = ov.key[ov.cyc[1][tb]];
            long long b2 = ov.key[ov.cyc[1][(tb + 1) % szB]];
            if (!ov.interleaved(a1, a2, b1, b2)) continue;
            Crossing x;
            x.ta = ta;
            x.tb = tb;
            // Order along each arc = order of the other chord's endpoint in
            // the ccw interval, from the arc's start (nesting of disjoint
            // chords over a crossing chord, valid in either face).
            long long bin = ov.ccw_between(a1, b1, a2) ? b1 : b2;
            long long ain = ov.ccw_between(b1, a1, b2) ? a1 : a2;
            x.da = ov.ccw_dist(a1, bin);
            x.db = ov.ccw_dist(b1, ain);
            cd.list.push_back(x);
        }
    }
    auto build_seq = [&](bool along_a, std::vector<int>& seq, std::vector<int>& pos) {
        seq.resize(cd.list.size());
        for (int i = 0; i < (int)cd.list.size(); ++i) seq[i] = i;
        std::sort(seq.begin(), seq.end(), [&](int i, int j) {
            const Crossing &x = cd.list[i], &y = cd.list[j];
            if (along_a) return x.ta != y.ta ? x.ta < y.ta : x.da < y.da;
            return x.tb != y.tb ? x.tb < y.tb : x.db < y.db;
        });
        pos.assign(cd.list.size(), -1);
        for (int i = 0; i < (int)seq.size(); ++i) pos[seq[i]] = i;
    };
    build_seq(true, cd.aseq, cd.apos);
    build_seq(false, cd.bseq, cd.bpos);
    return cd;
}

/// One empty-bigon candidate: crossings X, Y consecutive along both curves.
struct Bigon {
    int X = -1, Y = -1;
    int b_dir = 0;              // +1: curve 1 runs X -> Y through its gap
    std::vector<int> a_gap;     // curve-0 tokens strictly between X and Y
    std::vector<int> travel;    // curve-1 gap tokens ordered X -> Y
    Face fX = Face::Inner;      // face containing corner X
};

/// Tokens of curve c strictly between arc positions: after crossing on arc
/// t_from, up to and including cyc[t_to], in traversal order.
inline std::vector<int> gap_tokens(const Overlay& ov, int c, int t_from, int t_to,
                                   bool empty_gap) {
    std::vector<int> out;
    if (empty_gap) return out;
    int sz = (int)ov.cyc[c].size();
    int t = (t_from + 1) % sz;
    for (;;) {
        out.push_back(ov.cyc[c][t]);
        if (t == t_to) break;
        t = (t + 1) % sz;
    }
    return out;
}

/// Sides of the sphere cut by a bigon boundary, as parities relative to a
/// fixed star point just past v_0: a key's side flips once for each outer
/// arc of the bigon boundary separating it from the star.
struct BigonSides {
    const Overlay* ov;
    std::vector<int> g;          // bigon boundary circle tokens, cyclic
    Face face_last = Face::Inner; // face of arc g[r-1] -> g[0] (corner arc)

    Face arc_face_at(int i) const {
        int r = (int)g.size();
        // arc i joins g[i] -> g[i+1]; arc r-1 has face face_last.
        return ((r - 1 - i) % 2 == 0) ? face_last : opp(face_last);
    }
    int parity(long long k) const {
        int r = (int)g.size();
        int p = 0;
        for (int i = 0; i < r; ++i) {
            if (arc_face_at(i) != Face::Outer) continue;
            long long u = ov->key[g[i]], v = ov->key[g[(i + 1) % r]];
            if (ov->interleaved(u, v, k, ov->star_key())) p ^= 1;
        }
        return p;
    }
};

inline Bigon make_bigon(const Overlay& ov, const CrossingData& cd, int X, int Y, int b_dir) {
    Bigon bg;
    bg.X = X;
    bg.Y = Y;
    bg.b_dir = b_dir;
    const Crossing &cx = cd.list[X], &cy = cd.list[Y];
    bg.fX = ov.arc_face(0, cx.ta);
    require_internal(bg.fX == ov.arc_face(1, cx.tb), "crossing faces disagree");

    bool a_empty = cx.ta == cy.ta && cx.da < cy.da;
    bg.a_gap = gap_tokens(ov, 0, cx.ta, cy.ta, a_empty);

    if (b_dir > 0) {
        bool b_empty = cx.tb == cy.tb && cx.db < cy.db;
        bg.travel = gap_tokens(ov, 1, cx.tb, cy.tb, b_empty);
    } else {
        bool b_empty = cy.tb == cx.tb && cy.db < cx.db;
        bg.travel = gap_tokens(ov, 1, cy.tb, cx.tb, b_empty);
        std::reverse(bg.travel.begin(), bg.travel.end());
    }
    require_internal(((bg.a_gap.size() + bg.travel.size()) % 2) == 0,
                     "bigon boundary must cross the circle evenly");
    require_internal(!bg.a_gap.empty() || !bg.travel.empty(),
                     "chords can meet at most once per face");
    return bg;
}

inline BigonSides bigon_sides(const Overlay& ov, const Bigon& bg) {
    BigonSides sides;
    sides.ov = &ov;
    sides.g = bg.a_gap;
    for (auto it = bg.travel.rbegin(); it != bg.travel.rend(); ++it)
        sides.g.push_back(*it);
    sides.face_last = bg.fX;
    return sides;
}

/// Which parity class lies to the left of the bigon boundary traversed
/// A-gap then B-gap (i.e. X -> Y along curve 0, Y -> X along curve 1).
inline int left_class(const Overlay& ov, const BigonSides& sides) {
    // The boundary leaves g[0] crossing from fX's side; outward crossing
    // puts the left hand at increasing circle position.
    bool outward = sides.arc_face_at(0) == Face::Outer;
    long long sample = ov.key[sides.g[0]] + (outward ? 1 : -1);
    return sides.parity(sample);
}

/// Corner-ray analysis at crossing X, used when a curve's remainder carries
/// no circle point. Returns the parity-class side of the given ray.
inline int corner_ray_side(const Overlay& ov, const CrossingData& cd, const Bigon& bg,
                           const BigonSides& sides, int lclass, long long ray_target) {
    const Crossing& cx = cd.list[bg.X];
    int szA = (int)ov.cyc[0].size(), szB = (int)ov.cyc[1].size();
    long long a_from = ov.key[ov.cyc[0][cx.ta]];
    long long a_to = ov.key[ov.cyc[0][(cx.ta + 1) % szA]];
    long long b_from = ov.key[ov.cyc[1][cx.tb]];
    long long b_to = ov.key[ov.cyc[1][(cx.tb + 1) % szB]];
    long long ray_a = a_to;                              // into the A-gap
    long long ray_b = bg.b_dir > 0 ? b_to : b_from;      // into the B-gap
    // Cyclic ccw order of rays at the corner = circle order of targets,
    // reversed when the corner sits in the outer face.
    auto between = [&](long long a, long long x, long long b) {
        return bg.fX == Face::Inner ? ov.ccw_between(a, x, b) : ov.ccw_between(b, x, a);
    };
    // Directed boundary enters along ray_b and exits along ray_a; its left
    // side is the open ray sector from exit to entry.
    bool left = between(ray_a, ray_target, ray_b);
    return left ? lclass : 1 - lclass;
}

/// Parity side of everything of curve c outside the bigon gap.
inline int rest_side(const Overlay& ov, const CrossingData& cd, const Bigon& bg,
                     const BigonSides& sides, int lclass, int c) {
    const std::vector<int>& gap = c == 0 ? bg.a_gap : bg.travel;
    std::vector<char> in_gap(ov.tok_curve.size(), 0);
    for (int id : gap) in_gap[id] = 1;
    for (int id : ov.cyc[c])
        if (!in_gap[id]) return sides.parity(ov.key[id]);
    // The remainder is a single chord piece; classify its ray at corner X.
    const Crossing& cx = cd.list[bg.X];
    long long target;
    if (c == 0) {
        target = ov.key[ov.cyc[0][cx.ta]]; // backwards along the A-chord
    } else {
        int szB = (int)ov.cyc[1].size();
        long long b_from = ov.key[ov.cyc[1][cx.tb]];
        long long b_to = ov.key[ov.cyc[1][(cx.tb + 1) % szB]];
        target = bg.b_dir > 0 ? b_from : b_to; // away from the B-gap
    }
    return corner_ray_side(ov, cd, bg, sides, lclass, target);
}

/// Slide curve 0 across the bigon: its gap is replaced by a parallel copy
/// of curve 1's gap on the far side (sigma = parity class of the emptied
/// bigon interior).
inline void surger(Overlay& ov, const CrossingData& cd, const Bigon& bg, int sigma,
                   int lclass) {
    const Crossing &cx = cd.list[bg.X], &cy = cd.list[bg.Y];
    int szA = (int)ov.cyc[0].size();
    require_internal(bg.a_gap.size() < (size_t)szA || !bg.travel.empty(),
                     "cannot slide a curve off the circle entirely");

    bool left_of_travel = sigma == lclass;
    std::vector<int> fresh;
    for (int i = 0; i < (int)bg.travel.size(); ++i) {
        int anchor = bg.travel[i];
        // Travelling X -> Y the path starts in face fX and flips at each
        // circle point, so it crosses anchor i leaving into:
        Face after = (i % 2 == 0) ? opp(bg.fX) : bg.fX;
        bool outward = after == Face::Outer;
        bool insert_after = left_of_travel == outward;
        int id = ov.new_token(0, ov.tok_seg[anchor]);
        auto& order = ov.seg_order[ov.tok_seg[anchor]];
        auto it = std::find(order.begin(), order.end(), anchor);
        require_internal(it != order.end(), "anchor token missing from segment");
        order.insert(insert_after ? it + 1 : it, id);
        fresh.push_back(id);
    }

    std::vector<char> dead(ov.tok_curve.size(), 0);
    for (int id : bg.a_gap) {
        dead[id] = 1;
        ov.tok_alive[id] = 0;
    }
    for (auto& order : ov.seg_order)
        order.erase(std::remove_if(order.begin(), order.end(),
                                   [&](int id) { return dead[id]; }),
                    order.end());

    // New traversal: token before X, the fresh parallel points, token after Y.
    std::vector<int> nc;
    Face nface0;
    if ((int)bg.a_gap.size() == szA) {
        nc = fresh;
        require_internal(nc.size() >= 2, "slide produced a degenerate curve");
        nface0 = opp(bg.fX);
    } else {
        int anchor_p = ov.cyc[0][cx.ta];
        int t = cx.ta;
        // Walk from the token before X around the remainder to the token
        // ending the Y-arc, then append the fresh points before it closes.
        nc.push_back(anchor_p);
        for (int id : fresh) nc.push_back(id);
        int stop = (cy.ta + 1) % szA;
        for (int u = stop; u != cx.ta; u = (u + 1) % szA) nc.push_back(ov.cyc[0][u]);
        nface0 = bg.fX; // arc anchor_p -> first fresh point stays in X's face
        (void)t;
    }
    require_internal(nc.size() % 2 == 0, "curve traversal must have even length");
    ov.cyc[0] = std::move(nc);
    ov.face0[0] = nface0;
    ov.refresh_keys();
}

} // namespace detail

/// Minimal transverse intersection number of two curves, computed by
/// overlaying the taut encodings and removing innermost empty bigons until
/// none remain (bigon criterion).
inline int geometric_intersection(const Curve& a_in, const Curve& b_in) {
    using namespace detail;
    Curve A = tighten(validate(a_in));
    Curve B = tighten(validate(b_in));
    Overlay ov = make_overlay(A, B);

    int guard = 0;
    for (;;) {
        CrossingData cd = find_crossings(ov);
        int nx = (int)cd.list.size();
        require_internal(nx % 2 == 0, "closed curves on a sphere cross evenly");
        if (nx == 0) return 0;

        bool reduced = false;
        for (int i = 0; i < nx && !reduced; ++i) {
            int X = cd.aseq[i], Y = cd.aseq[(i + 1) % nx];
            if (X == Y) continue;
            int jx = cd.bpos[X], jy = cd.bpos[Y];
            for (int b_dir : {+1, -1}) {
                int want = b_dir > 0 ? jx : jy;
                int next = (want + 1) % nx;
                if (cd.bseq[next] != (b_dir > 0 ? Y : X)) continue;
                Bigon bg = make_bigon(ov, cd, X, Y, b_dir);
                BigonSides sides = bigon_sides(ov, bg);
                int lclass = left_class(ov, sides);
                std::array<int, 2> punct = {0, 0};
                for (int j = 0; j < 2 * ov.n + 2; ++j)
                    punct[sides.parity(ov.puncture_key(j))]++;
                int ra = rest_side(ov, cd, bg, sides, lclass, 0);
                int rb = rest_side(ov, cd, bg, sides, lclass, 1);
                for (int sigma = 0; sigma < 2 && !reduced; ++sigma) {
                    if (punct[sigma] != 0 || ra == sigma || rb == sigma) continue;
                    surger(ov, cd, bg, sigma, lclass);
                    int after = (int)find_crossings(ov).list.size();
                    require_internal(after == nx - 2, "bigon removal must drop 2 crossings");
                    validate(ov.extract(0));
                    reduced = true;
                }
                if (reduced) break;
            }
        }
        if (!reduced) return nx;
        require_internal(++guard < 100000, "intersection reduction failed to terminate");
    }
}

/// Curves are isotopic iff they are disjoint after tautening and split the
/// punctures the same way (disjoint curves then cobound an unpunctured
/// annulus on the sphere).
inline bool is_isotopic(const Curve& a, const Curve& b) {
    if (geometric_intersection(a, b) != 0) return false;
    auto pa = puncture_partition(tighten(validate(a)));
    auto pb = puncture_partition(tighten(validate(b)));
    return (pa.first == pb.first && pa.second == pb.second) ||
           (pa.first == pb.second && pa.second == pb.first);
}

enum class RegionSide { Inside, Outside, Crossing };

inline const char* region_side_name(RegionSide r) {
    switch (r) {
        case RegionSide::Inside: return "Inside";
        case RegionSide::Outside: return "Outside";
        default: return "Crossing";
    }
}

/// Position of a curve relative to a disk region: Crossing if it meets the
/// boundary essentially; Inside iff it can be isotoped into the region,
/// detected by all punctures outside the region lying on one side of it.
inline RegionSide region_side(const Curve& c, const Region& E) {
    if (geometric_intersection(c, E.boundary) > 0) return RegionSide::Crossing;
    auto [a, b] = puncture_partition(tighten(validate(c)));
    auto inside = [&](const std::vector<int>& side) {
        for (int j = 0; j < c.seg_count(); ++j) {
            bool in_e = std::find(E.punctures_inside.begin(), E.punctures_inside.end(), j) !=
                        E.punctures_inside.end();
            bool in_side = std::find(side.begin(), side.end(), j) != side.end();
            if (!in_e && !in_side) return false;
        }
        return true;
    };
    return inside(a) || inside(b) ? RegionSide::Inside : RegionSide::Outside;
}

} // namespace dcx

#endif
