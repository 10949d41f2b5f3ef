#ifndef DCX_TANGLE_HPP
#define DCX_TANGLE_HPP

#include <optional>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"
#include "dcx/layout.hpp"
#include "dcx/word.hpp"

namespace dcx {

/// Substitute puncture loops by bridge meridians of one trivial tangle:
/// the side-labeled segment pairing (v_p, v_q), p the segment's start,
/// sends x_p to that bridge's meridian and x_q to its inverse. The sphere
/// relation telescopes to 1, so this is well defined on peripheral classes.
inline FreeWord meridian_image(const FreeWord& w, const BridgeLayout& L, Sign side) {
    int P = L.puncture_count;
    std::vector<int> image(P, 0); // signed meridian letter per puncture loop
    for (int j = 0; j < L.seg_count(); ++j) {
        SegSide want = side == Sign::Plus ? SegSide::Upper : SegSide::Lower;
        if (L.segments[j].side != want) continue;
        int b = L.segments[j].bridge;
        image[j] = b;                       // x_{v_j} -> m_b
        image[(j + 1) % P] = -b;            // x_{v_{j+1}} -> m_b^{-1}
    }
    FreeWord out;
    for (int l : w.letters) {
        int img = image[std::abs(l) - 1];
        require_internal(img != 0, "puncture missing a bridge on this side");
        out.letters.push_back(l > 0 ? img : -img);
    }
    return cyclic_reduce(out);
}

enum class CompressionSide { Above, Below, NoCompression };

inline const char* compression_side_name(CompressionSide s) {
    switch (s) {
        case CompressionSide::Above: return "Above";
        case CompressionSide::Below: return "Below";
        default: return "NoCompression";
    }
}

/// On which side of the bridge sphere the curve bounds a compressing disk:
/// it compresses into a trivial tangle complement iff its peripheral word
/// dies in that side's free group of meridians.
inline CompressionSide compression_side(const Curve& input) {
    Curve c = tighten(validate(input));
    check(is_essential(c), Errc::InessentialCurve, "curve bounds no essential disk");
    auto L = build_layout(c.n);
    FreeWord w = peripheral_word(c);
    bool above = meridian_image(w, L, Sign::Plus).trivial();
    bool below = meridian_image(w, L, Sign::Minus).trivial();
    require_internal(!(above && below), "curve cannot compress on both sides");
    if (above) return CompressionSide::Above;
    if (below) return CompressionSide::Below;
    return CompressionSide::NoCompression;
}

struct ClassLabel {
    int i = 0;
    Sign side = Sign::Plus;
    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Compressing disk recorded by its boundary curve and compression side.
struct DiskVertex {
    Curve curve; // taut
    CompressionSide side = CompressionSide::Above;
    std::optional<ClassLabel> label;
};

inline DiskVertex make_vertex(const Curve& input) {
    DiskVertex v;
    v.curve = tighten(validate(input));
    v.side = compression_side(v.curve);
    check(v.side != CompressionSide::NoCompression, Errc::NoCompression,
          "curve bounds no compressing disk");
    return v;
}

} // namespace dcx

#endif
