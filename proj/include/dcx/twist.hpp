#ifndef DCX_TWIST_HPP
#define DCX_TWIST_HPP

#include <vector>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"

namespace dcx {

/// Half twist swapping punctures v_j, v_{j+1} inside a disk that meets the
/// shadow circle only along segment s_j. Each strand crossing s_j is
/// dragged half-way around: it picks up one crossing of each neighboring
/// segment and reverses its rank on s_j. direction = +1 or -1 picks the
/// sense of rotation. Result is re-tautened.
inline Curve apply_half_twist(const Curve& input, int j, int direction) {
    check(direction == 1 || direction == -1, Errc::Malformed, "direction must be +1 or -1");
    Curve c = tighten(validate(input));
    int S = c.seg_count();
    check(j >= 0 && j < S, Errc::Malformed, "segment index out of range");
    int w = c.weights[j];
    if (w == 0) return c;

    int prev = (j + S - 1) % S, next = (j + 1) % S;
    int wp = c.weights[prev], wn = c.weights[next];

    // Strand k enters at (j,k). With direction +1 its tail sweeps across
    // v_j into s_{j-1} through the inner face and its head across v_{j+1}
    // into s_{j+1} through the outer face; with -1 the faces swap, which
    // exchanges the roles of the two neighboring segments.
    int inner_seg = direction > 0 ? prev : next;
    int outer_seg = direction > 0 ? next : prev;

    // New points.  On the inner-splice segment they sit nearest v_j or
    // v_{j+1} respectively, i.e. after all old points on s_{j-1}, before
    // all old points on s_{j+1} (old s_{j+1} indices shift up by w).
    auto inner_new = [&](int k) -> Pt {
        return direction > 0 ? Pt{prev, wp + k} : Pt{next, k};
    };
    auto outer_new = [&](int k) -> Pt {
        return direction > 0 ? Pt{next, k} : Pt{prev, wp + k};
    };
    (void)inner_seg;
    (void)outer_seg;
    auto mid_new = [&](int k) -> Pt { return Pt{j, w - 1 - k}; };

    int shifted = next; // old points on s_{j+1} move past the w inserted ones
    auto shift_old = [&](Pt p) -> Pt {
        if (p.seg == shifted) p.idx += w;
        return p;
    };

    // Old partners of the s_j points in each face.
    std::vector<Pt> in_partner(w), out_partner(w);
    std::vector<char> seen_in(w, 0), seen_out(w, 0);
    std::vector<Chord> inner_keep, outer_keep;
    for (const auto& ch : c.inner) {
        if (ch[0].seg == j || ch[1].seg == j) {
            Pt on = ch[0].seg == j ? ch[0] : ch[1];
            Pt other = ch[0].seg == j ? ch[1] : ch[0];
            require_internal(other.seg != j, "taut curve has a same-segment chord");
            in_partner[on.idx] = shift_old(other);
            seen_in[on.idx] = 1;
        } else {
            inner_keep.push_back(make_chord(shift_old(ch[0]), shift_old(ch[1])));
        }
    }
    for (const auto& ch : c.outer) {
        if (ch[0].seg == j || ch[1].seg == j) {
            Pt on = ch[0].seg == j ? ch[0] : ch[1];
            Pt other = ch[0].seg == j ? ch[1] : ch[0];
            require_internal(other.seg != j, "taut curve has a same-segment chord");
            out_partner[on.idx] = shift_old(other);
            seen_out[on.idx] = 1;
        } else {
            outer_keep.push_back(make_chord(shift_old(ch[0]), shift_old(ch[1])));
        }
    }
    for (int k = 0; k < w; ++k)
        require_internal(seen_in[k] && seen_out[k], "point of s_j missing a partner");

    Curve out;
    out.n = c.n;
    out.weights = c.weights;
    out.weights[prev] += w;
    out.weights[next] += w;
    out.inner = std::move(inner_keep);
    out.outer = std::move(outer_keep);
    for (int k = 0; k < w; ++k) {
        Pt A = inner_new(k), B = mid_new(k), C = outer_new(k);
        out.inner.push_back(make_chord(in_partner[k], A));
        out.outer.push_back(make_chord(A, B));
        out.inner.push_back(make_chord(B, C));
        out.outer.push_back(make_chord(C, out_partner[k]));
    }
    (void)wn;
    return tighten(validate(out));
}

} // namespace dcx

#endif
