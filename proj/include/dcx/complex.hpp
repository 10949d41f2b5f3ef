#ifndef DCX_COMPLEX_HPP
#define DCX_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dcx/classifier.hpp"
#include "dcx/curve.hpp"
#include "dcx/errors.hpp"
#include "dcx/homology.hpp"
#include "dcx/intersect.hpp"
#include "dcx/tangle.hpp"
#include "dcx/twist.hpp"

namespace dcx {

/// Finite truncation of the disk complex: flag simplices over the
/// disjointness graph of compressing-disk boundary curves.
struct ComplexSlice {
    std::vector<DiskVertex> vertices;            // canonically sorted
    std::vector<std::pair<int, int>> edges;      // index pairs, i < j
    std::vector<std::vector<std::vector<int>>> simplices; // [dim][simplex][vertex]
    std::vector<IntMatrix> boundary;             // boundary[k]: C_k -> C_{k-1}
};

namespace detail {

/// All non-crossing perfect matchings of a block of circle-ordered points,
/// as flat partner maps; chords joining two points of the same segment are
/// pruned (never taut). Matching the first point splits the block in two.
inline std::vector<std::vector<int>> noncrossing_matchings(const std::vector<int>& seg_of,
                                                           int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (lo >= hi) {
        out.emplace_back(seg_of.size(), -1);
        return out;
    }
    for (int partner = lo + 1; partner < hi; partner += 2) {
        if (seg_of[lo] == seg_of[partner]) continue;
        auto lefts = noncrossing_matchings(seg_of, lo + 1, partner);
        auto rights = noncrossing_matchings(seg_of, partner + 1, hi);
        for (const auto& lm : lefts)
            for (const auto& rm : rights) {
                std::vector<int> m(seg_of.size(), -1);
                m[lo] = partner;
                m[partner] = lo;
                for (int p = lo + 1; p < partner; ++p) m[p] = lm[p];
                for (int p = partner + 1; p < hi; ++p) m[p] = rm[p];
                out.push_back(std::move(m));
            }
    }
    return out;
}

/// Points 0..m-1 form one cycle under alternating inner/outer partners.
inline bool single_cycle(const std::vector<int>& inner, const std::vector<int>& outer) {
    int m = (int)inner.size();
    int p = 0, steps = 0;
    do {
        p = outer[inner[p]];
        steps += 2;
    } while (p != 0 && steps <= 2 * m);
    return steps == m;
}

} // namespace detail

/// Every compressing isotopy class whose taut encoding has total weight at
/// most max_weight, by exhaustive normal-form enumeration. work_cap bounds
/// the number of examined encodings; exceeding it raises ResourceCap
/// rather than silently truncating.
inline std::vector<DiskVertex> enumerate_vertices(const BridgeLayout& L, int max_weight,
                                                  std::int64_t work_cap = 400000000) {
    check(max_weight >= 2, Errc::Malformed, "max_weight must be >= 2");
    int S = L.seg_count();
    std::map<std::string, DiskVertex> found;
    std::int64_t work = 0;

    std::vector<int> w(S, 0);
    auto essential_weights = [&]() {
        // Both complementary puncture sets need at least two members; this
        // depends on the weights alone.
        int parity = 0, a = 0, b = 0;
        for (int j = 0; j < S; ++j) {
            (parity == 0 ? a : b)++;
            parity ^= w[j] & 1;
        }
        return a >= 2 && b >= 2;
    };
    auto consider = [&]() {
        int total = 0;
        for (int x : w) total += x;
        if (total == 0 || total % 2 != 0 || !essential_weights()) return;
        std::vector<Pt> pts;
        std::vector<int> seg_of;
        for (int s = 0; s < S; ++s)
            for (int k = 0; k < w[s]; ++k) {
                pts.push_back({s, k});
                seg_of.push_back(s);
            }
        auto mats = detail::noncrossing_matchings(seg_of, 0, total);
        auto to_chords = [&](const std::vector<int>& m) {
            std::vector<Chord> ch;
            for (int p = 0; p < total; ++p)
                if (m[p] > p) ch.push_back(make_chord(pts[p], pts[m[p]]));
            return ch;
        };
        for (const auto& in : mats)
            for (const auto& out : mats) {
                check(++work <= work_cap, Errc::ResourceCap,
                      "enumeration exceeded the work cap");
                if (!detail::single_cycle(in, out)) continue;
                Curve c;
                c.n = L.n;
                c.weights = w;
                c.inner = to_chords(in);
                c.outer = to_chords(out);
                // Same-segment chords were pruned, so c is already taut.
                std::string key = canonical_key(c);
                if (found.count(key)) continue;
                try {
                    found.emplace(key, make_vertex(c));
                } catch (const Error& e) {
                    if (e.code() != Errc::NoCompression) throw;
                }
            }
    };
    // Odometer over weight vectors with sum <= max_weight.
    for (;;) {
        consider();
        int total = 0;
        for (int x : w) total += x;
        int i = 0;
        for (; i < S; ++i) {
            if (total + 1 <= max_weight) {
                ++w[i];
                break;
            }
            total -= w[i];
            w[i] = 0;
        }
        if (i == S) break;
    }

    std::vector<DiskVertex> out;
    for (auto& [key, v] : found) out.push_back(std::move(v));
    return out;
}

/// Closure of the reference vertices under at most depth side-preserving
/// half twists (upper twists on Above vertices, lower twists on Below).
inline std::vector<DiskVertex> twist_orbit(const BridgeLayout& L, int depth) {
    check(depth >= 0, Errc::Malformed, "depth must be >= 0");
    std::map<std::string, DiskVertex> seen;
    std::vector<DiskVertex> frontier;
    for (int i = 1; i <= L.n; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            auto v = make_vertex(reference_curve(L, i, s));
            auto key = canonical_key(v.curve);
            if (seen.emplace(key, v).second) frontier.push_back(v);
        }
    for (int d = 0; d < depth; ++d) {
        std::vector<DiskVertex> next;
        for (const auto& v : frontier) {
            int par = v.side == CompressionSide::Above ? 0 : 1;
            for (int j = par; j < L.seg_count(); j += 2)
                for (int dir : {+1, -1}) {
                    Curve t = apply_half_twist(v.curve, j, dir);
                    std::string key = canonical_key(t);
                    if (seen.count(key)) continue;
                    DiskVertex nv = make_vertex(t);
                    require_internal(nv.side == v.side,
                                     "side-preserving twist changed the side");
                    seen.emplace(key, nv);
                    next.push_back(nv);
                }
        }
        frontier = std::move(next);
    }
    std::vector<DiskVertex> out;
    for (auto& [key, v] : seen) out.push_back(std::move(v));
    return out;
}

/// Flag complex on the disjointness graph of the given vertices, with
/// integer boundary matrices (simplices oriented by sorted vertex order).
inline ComplexSlice build_complex(std::vector<DiskVertex> vertices, int dim_cap) {
    check(dim_cap >= 0, Errc::Malformed, "dim_cap must be >= 0");
    std::sort(vertices.begin(), vertices.end(), [](const DiskVertex& a, const DiskVertex& b) {
        return canonical_key(a.curve) < canonical_key(b.curve);
    });
    int V = (int)vertices.size();
    ComplexSlice cs;
    cs.vertices = std::move(vertices);

    std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) {
            require_internal(canonical_key(cs.vertices[i].curve) !=
                                 canonical_key(cs.vertices[j].curve),
                             "vertex list not deduplicated");
            if (geometric_intersection(cs.vertices[i].curve, cs.vertices[j].curve) == 0 &&
                !is_isotopic(cs.vertices[i].curve, cs.vertices[j].curve))
                adj[i][j] = adj[j][i] = 1;
        }
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (adj[i][j]) cs.edges.push_back({i, j});

    cs.simplices.resize(dim_cap + 1);
    for (int i = 0; i < V; ++i) cs.simplices[0].push_back({i});
    for (int d = 1; d <= dim_cap; ++d) {
        for (const auto& sx : cs.simplices[d - 1]) {
            for (int j = sx.back() + 1; j < V; ++j) {
                bool ok = true;
                for (int u : sx)
                    if (!adj[u][j]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto ns = sx;
                ns.push_back(j);
                cs.simplices[d].push_back(ns);
            }
        }
    }

    // Boundary matrices.
    cs.boundary.resize(dim_cap + 1);
    for (int d = 1; d <= dim_cap; ++d) {
        std::map<std::vector<int>, int> index;
        for (int k = 0; k < (int)cs.simplices[d - 1].size(); ++k)
            index[cs.simplices[d - 1][k]] = k;
        IntMatrix m(cs.simplices[d - 1].size(),
                    std::vector<std::int64_t>(cs.simplices[d].size(), 0));
        for (int k = 0; k < (int)cs.simplices[d].size(); ++k) {
            const auto& sx = cs.simplices[d][k];
            for (int drop = 0; drop <= d; ++drop) {
                std::vector<int> face;
                for (int t = 0; t <= d; ++t)
                    if (t != drop) face.push_back(sx[t]);
                auto it = index.find(face);
                require_internal(it != index.end(), "face of a simplex is missing");
                m[it->second][k] += (drop % 2 == 0) ? 1 : -1;
            }
        }
        cs.boundary[d] = std::move(m);
    }
    // d d = 0 sanity on consecutive matrices.
    for (int d = 2; d <= dim_cap; ++d) {
        const auto& a = cs.boundary[d - 1];
        const auto& b = cs.boundary[d];
        if (a.empty() || b.empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t k = 0; k < b[0].size(); ++k) {
                std::int64_t s = 0;
                for (size_t j = 0; j < b.size(); ++j) s += a[i][j] * b[j][k];
                require_internal(s == 0, "boundary of boundary is nonzero");
            }
    }
    return cs;
}

/// The octahedral (n-1)-sphere spanned by the 2n reference disks.
inline ComplexSlice octahedron(const BridgeLayout& L) {
    std::vector<DiskVertex> refs;
    for (int i = 1; i <= L.n; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            auto v = make_vertex(reference_curve(L, i, s));
            v.label = ClassLabel{i, s};
            refs.push_back(v);
        }
    auto cs = build_complex(std::move(refs), std::max(0, L.n - 1));
    require_internal((int)cs.simplices.back().size() == (1 << L.n) || L.n == 1,
                     "octahedron must have 2^n top simplices");
    return cs;
}

inline std::vector<int> homology_ranks(const ComplexSlice& cs, int max_dim) {
    std::vector<int> sizes;
    for (const auto& dim : cs.simplices) sizes.push_back((int)dim.size());
    return reduced_betti(sizes, cs.boundary, max_dim);
}

} // namespace dcx

#endif
