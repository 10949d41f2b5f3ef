#ifndef DCX_ORACLE_HPP
#define DCX_ORACLE_HPP

#include <random>
#include <string>
#include <vector>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"
#include "dcx/intersect.hpp"
#include "dcx/tangle.hpp"
#include "dcx/twist.hpp"

namespace dcx {

/// Cyclic block of punctures on the 2n+2 circle; its neighborhood curve is
/// the boundary of a regular neighborhood of the enclosed shadow arc.
struct ArcInterval {
    int start = 0;
    int len = 0;
    int total = 0;

    bool contains(int j) const {
        int d = ((j - start) % total + total) % total;
        return d < len;
    }
};

inline ArcInterval checked_interval(int start, int len, int total) {
    ArcInterval a{((start % total) + total) % total, len, total};
    check(len >= 2 && len <= total - 2, Errc::Malformed,
          "interval must be proper and essential");
    return a;
}

/// Closed-form minimal intersection of two neighborhood-of-arc boundary
/// curves: zero when the blocks are nested or disjoint, otherwise two per
/// cyclic component of the overlap.
inline int arc_pair_intersection(const ArcInterval& A, const ArcInterval& B) {
    require_internal(A.total == B.total, "intervals on different circles");
    int P = A.total;
    std::vector<char> in_both(P);
    int overlap = 0;
    for (int j = 0; j < P; ++j) {
        in_both[j] = A.contains(j) && B.contains(j);
        overlap += in_both[j];
    }
    if (overlap == 0 || overlap == A.len || overlap == B.len) return 0;
    int blocks = 0;
    for (int j = 0; j < P; ++j)
        if (in_both[j] && !in_both[(j + P - 1) % P]) ++blocks;
    return 2 * blocks;
}

/// The puncture block enclosed by reference disk D_i^{side}.
inline ArcInterval reference_interval(const BridgeLayout& L, int i, Sign side) {
    SegArc arc = reference_arc(L, i, side);
    return checked_interval(arc.start, 2 * i, L.seg_count());
}

struct EquivarianceReport {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> witnesses;
};

namespace detail {

inline Curve random_curve(const BridgeLayout& L, std::mt19937_64& rng, int steps) {
    std::uniform_int_distribution<int> seg(0, L.seg_count() - 1);
    std::uniform_int_distribution<int> ip(1, L.n);
    std::uniform_int_distribution<int> coin(0, 1);
    Curve c = reference_curve(L, ip(rng), coin(rng) ? Sign::Plus : Sign::Minus);
    for (int s = 0; s < steps; ++s) c = apply_half_twist(c, seg(rng), coin(rng) ? 1 : -1);
    return c;
}

} // namespace detail

/// Pit the main operations against mapping-class equivariance: applying a
/// common random twist sequence must preserve intersection numbers,
/// essentiality and partition-size profile; side-preserving twists must
/// preserve compression_side.
inline EquivarianceReport equivariance_suite(int n, std::uint64_t seed, int trials) {
    check(trials >= 1, Errc::Malformed, "trials must be >= 1");
    auto L = build_layout(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> seg(0, L.seg_count() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> ntw(0, 3);

    EquivarianceReport rep;
    rep.trials = trials;
    auto fail = [&](const std::string& msg) {
        ++rep.failures;
        if (rep.witnesses.size() < 20) rep.witnesses.push_back(msg);
    };

    for (int t = 0; t < trials; ++t) {
        Curve a = detail::random_curve(L, rng, ntw(rng));
        Curve b = detail::random_curve(L, rng, ntw(rng));
        int before = geometric_intersection(a, b);
        bool ess_a = is_essential(tighten(a));
        auto part_a = puncture_partition(tighten(a));
        size_t small_a = std::min(part_a.first.size(), part_a.second.size());

        Curve ta = a, tb = b;
        int k = ntw(rng);
        for (int s = 0; s < k; ++s) {
            int j = seg(rng);
            int d = coin(rng) ? 1 : -1;
            ta = apply_half_twist(ta, j, d);
            tb = apply_half_twist(tb, j, d);
        }
        if (geometric_intersection(ta, tb) != before)
            fail("trial " + std::to_string(t) + ": intersection not twist invariant");
        if (is_essential(ta) != ess_a)
            fail("trial " + std::to_string(t) + ": essentiality not twist invariant");
        auto part_ta = puncture_partition(ta);
        if (std::min(part_ta.first.size(), part_ta.second.size()) != small_a)
            fail("trial " + std::to_string(t) + ": partition profile changed");

        // Side preserving twists: upper twists (even segments) fix the
        // upper tangle, lower twists the lower one.
        if (ess_a) {
            auto side = compression_side(a);
            if (side != CompressionSide::NoCompression) {
                int par = side == CompressionSide::Above ? 0 : 1;
                Curve u = a;
                for (int s = 0; s < 2; ++s) {
                    int j = 2 * (seg(rng) / 2) + par;
                    u = apply_half_twist(u, j % L.seg_count(), coin(rng) ? 1 : -1);
                }
                if (compression_side(u) != side)
                    fail("trial " + std::to_string(t) + ": side not preserved");
            }
        }
    }
    return rep;
}

} // namespace dcx

#endif
