#ifndef DCX_CLASSIFIER_HPP
#define DCX_CLASSIFIER_HPP

#include <vector>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"
#include "dcx/intersect.hpp"
#include "dcx/tangle.hpp"

namespace dcx {

/// Reference disks and regions of one layout, cached for classification.
struct ReferenceSet {
    BridgeLayout L;
    std::vector<Curve> upper, lower;    // index i-1 holds ∂D_i^±
    std::vector<Region> upper_regions;  // E_i^+ bounded by ∂D_i^+
    std::vector<Region> lower_regions;  // E_i (= E_i^-) bounded by ∂D_i^-

    explicit ReferenceSet(int n) : L(build_layout(n)) {
        for (int i = 1; i <= n; ++i) {
            upper.push_back(reference_curve(L, i, Sign::Plus));
            lower.push_back(reference_curve(L, i, Sign::Minus));
            upper_regions.push_back(reference_region(L, i, Sign::Plus));
            lower_regions.push_back(reference_region(L, i, Sign::Minus));
        }
    }

    const Curve& disk(int i, Sign s) const { return (s == Sign::Plus ? upper : lower)[i - 1]; }
    const Region& region(int i, Sign s) const {
        return (s == Sign::Plus ? upper_regions : lower_regions)[i - 1];
    }
};

/// Decide which class C_i^± a compressing vertex falls in, walking the
/// nested regions inward. Each "inside" branch carries the isotopy
/// isotopy assertion the class partition promises; a failed assertion or an
/// exhausted loop reports Unclassifiable.
inline ClassLabel classify(const DiskVertex& v, const ReferenceSet& refs) {
    int n = refs.L.n;
    require_internal(v.curve.n == n, "vertex and reference set sizes differ");
    check(v.side != CompressionSide::NoCompression, Errc::Unclassifiable,
          "vertex has no compression side");
    Sign mine = v.side == CompressionSide::Above ? Sign::Plus : Sign::Minus;
    Sign other = opposite(mine);
    // Above probes even i against lower disks; Below probes odd i against
    // upper disks.
    int first = mine == Sign::Plus ? 2 : 1;
    for (int i = first; i <= n; i += 2) {
        if (geometric_intersection(v.curve, refs.disk(i, other)) > 0)
            return {i, mine};
        if (region_side(v.curve, refs.region(i, other)) == RegionSide::Inside) {
            // Singleton class: the disk nested strictly inside E_i missing
            // D_i^{other} must be the reference disk one step down.
            check(i > 1, Errc::Unclassifiable,
                  "no essential curve lies strictly inside the innermost region");
            check(is_isotopic(v.curve, refs.disk(i - 1, mine)), Errc::Unclassifiable,
                  "inside-region vertex is not the expected singleton");
            return {i - 1, mine};
        }
    }
    // Loop exhausted: only the outermost singleton remains, when parity
    // gives that side a terminal reference disk.
    bool terminal = (mine == Sign::Plus) == (n % 2 == 1);
    check(terminal, Errc::Unclassifiable, "vertex escaped every class");
    check(is_isotopic(v.curve, refs.disk(n, mine)), Errc::Unclassifiable,
          "terminal vertex is not the expected singleton");
    return {n, mine};
}

inline DiskVertex retraction_image(const DiskVertex& v, const ReferenceSet& refs) {
    ClassLabel l = classify(v, refs);
    DiskVertex out = make_vertex(refs.disk(l.i, l.side));
    out.label = l;
    require_internal(out.side ==
                         (l.side == Sign::Plus ? CompressionSide::Above : CompressionSide::Below),
                     "reference disk compresses on the wrong side");
    return out;
}

inline bool antipodal(const ClassLabel& a, const ClassLabel& b) {
    return a.i == b.i && a.side != b.side;
}

enum class EdgeVerdict { Simplicial, Violation };

/// An edge of the disk complex maps under the retraction to a vertex or an
/// edge of the octahedral sphere unless its labels are antipodal, which
/// would break the retraction and contradict the class partition.
inline EdgeVerdict check_edge(const DiskVertex& u, const DiskVertex& v,
                              const ReferenceSet& refs) {
    return antipodal(classify(u, refs), classify(v, refs)) ? EdgeVerdict::Violation
                                                           : EdgeVerdict::Simplicial;
}

} // namespace dcx

#endif
