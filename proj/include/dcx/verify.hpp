#ifndef DCX_VERIFY_HPP
#define DCX_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcx/classifier.hpp"
#include "dcx/complex.hpp"
#include "dcx/json_io.hpp"
#include "dcx/oracle.hpp"
#include "dcx/twist.hpp"

namespace dcx {

struct RunConfig {
    int n = 2;
    int max_weight = 10;
    int twist_depth = 4;
    std::uint64_t seed = 0;
    int dim_cap = -1; // default: n
    int jobs = 1;     // must not affect output
};

struct CheckResult {
    std::string id;
    bool pass = true;
    std::string detail;
};

struct Report {
    RunConfig cfg;
    std::vector<CheckResult> checks;
    std::map<std::string, std::int64_t> counts;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    return json{{"n", r.cfg.n},
                {"params",
                 {{"max_weight", r.cfg.max_weight},
                  {"twist_depth", r.cfg.twist_depth},
                  {"seed", r.cfg.seed},
                  {"dim_cap", r.cfg.dim_cap < 0 ? r.cfg.n : r.cfg.dim_cap}}},
                {"checks", checks},
                {"counts", counts}};
}

namespace detail {

struct Checker {
    Report& rep;
    std::string id;
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
    ~Checker() { rep.checks.push_back({id, ok, ok ? "" : why}); }
};

} // namespace detail

/// The full acceptance battery V1-V10. Failures are recorded in the
/// report, not thrown; the CLI maps them to exit codes.
inline Report verify_suite(const RunConfig& cfg) {
    Report rep;
    rep.cfg = cfg;
    int dim_cap = cfg.dim_cap < 0 ? cfg.n : cfg.dim_cap;

    { // V1: reference matrix vs the arc-overlap oracle, n = 1..4.
        detail::Checker ck{rep, "V1"};
        for (int n = 1; n <= 4; ++n) {
            auto L = build_layout(n);
            for (int i = 1; i <= n; ++i)
                for (Sign si : {Sign::Plus, Sign::Minus})
                    for (int j = 1; j <= n; ++j)
                        for (Sign sj : {Sign::Plus, Sign::Minus}) {
                            int want = (i == j && si != sj) ? 2 : 0;
                            int got = geometric_intersection(reference_curve(L, i, si),
                                                             reference_curve(L, j, sj));
                            int orc = arc_pair_intersection(reference_interval(L, i, si),
                                                            reference_interval(L, j, sj));
                            ck.expect(got == want && orc == want,
                                      "n=" + std::to_string(n) + " pair (" +
                                          std::to_string(i) + sign_name(si) + "," +
                                          std::to_string(j) + sign_name(sj) + ") got " +
                                          std::to_string(got) + "/" + std::to_string(orc));
                        }
        }
    }

    { // V2: classifier fixes the references, n <= 4.
        detail::Checker ck{rep, "V2"};
        for (int n = 1; n <= 4; ++n) {
            ReferenceSet refs(n);
            for (int i = 1; i <= n; ++i)
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    try {
                        auto l = classify(make_vertex(refs.disk(i, s)), refs);
                        ck.expect(l == ClassLabel{i, s},
                                  "wrong label for reference n=" + std::to_string(n));
                    } catch (const Error& e) {
                        ck.expect(false, std::string("classify threw: ") + e.what());
                    }
                }
        }
    }

    // Shared vertex set at the configured scale (V3, V4, V5, V8).
    ReferenceSet refs(cfg.n);
    std::vector<DiskVertex> pool;
    {
        std::map<std::string, DiskVertex> dedup;
        for (auto& v : enumerate_vertices(refs.L, cfg.max_weight))
            dedup.emplace(canonical_key(v.curve), std::move(v));
        for (auto& v : twist_orbit(refs.L, cfg.twist_depth))
            dedup.emplace(canonical_key(v.curve), std::move(v));
        for (auto& [k, v] : dedup) pool.push_back(std::move(v));
    }
    rep.counts["pool_vertices"] = (std::int64_t)pool.size();
    std::vector<ClassLabel> labels(pool.size());

    { // V3: every pool vertex classifies, and labels are representative-independent.
        detail::Checker ck{rep, "V3"};
        for (size_t k = 0; k < pool.size(); ++k) {
            try {
                labels[k] = classify(pool[k], refs);
            } catch (const Error& e) {
                ck.expect(false, std::string("unclassifiable vertex: ") + e.what());
                continue;
            }
            // Re-represent by a twist and its inverse; label must not move.
            Curve moved = apply_half_twist(apply_half_twist(pool[k].curve, 1, +1), 1, -1);
            DiskVertex w = pool[k];
            w.curve = moved;
            try {
                ck.expect(classify(w, refs) == labels[k], "label depends on representative");
            } catch (const Error& e) {
                ck.expect(false, std::string("re-representation unclassifiable: ") + e.what());
            }
        }
    }

    std::vector<std::pair<int, int>> disjoint_pairs;
    { // V4: no antipodal edges among disjoint pairs.
        detail::Checker ck{rep, "V4"};
        for (size_t a = 0; a < pool.size(); ++a)
            for (size_t b = a + 1; b < pool.size(); ++b) {
                if (geometric_intersection(pool[a].curve, pool[b].curve) != 0) continue;
                if (is_isotopic(pool[a].curve, pool[b].curve)) continue;
                disjoint_pairs.push_back({(int)a, (int)b});
                ck.expect(!antipodal(labels[a], labels[b]),
                          "antipodal disjoint pair " + std::to_string(a) + "," +
                              std::to_string(b));
            }
        rep.counts["disjoint_pairs"] = (std::int64_t)disjoint_pairs.size();
    }

    { // V5: exhaustion near E_2. At n=2 the only Above vertex disjoint from
      // ∂D_2^- with boundary inside E_2 is ∂D_1^+; at n=3 every such vertex
      // Outside E_2 must be ∂D_3^+ (checked over the orbit plus a low-weight
      // enumeration).
        detail::Checker ck{rep, "V5"};
        {
            ReferenceSet r2(2);
            std::vector<DiskVertex> pool2;
            if (cfg.n == 2) {
                pool2 = pool;
            } else {
                for (auto& v : enumerate_vertices(r2.L, 10)) pool2.push_back(std::move(v));
            }
            const auto& e2 = r2.region(2, Sign::Minus);
            std::int64_t hits = 0;
            for (const auto& v : pool2) {
                if (v.side != CompressionSide::Above) continue;
                if (geometric_intersection(v.curve, r2.disk(2, Sign::Minus)) != 0) continue;
                if (region_side(v.curve, e2) != RegionSide::Inside) continue;
                ++hits;
                ck.expect(is_isotopic(v.curve, r2.disk(1, Sign::Plus)),
                          "inside-E_2 witness is not D_1^+");
            }
            rep.counts["inside_e2_instances"] = hits;
        }
        {
            ReferenceSet r3(3);
            std::map<std::string, DiskVertex> set3;
            for (auto& v : twist_orbit(r3.L, 3)) set3.emplace(canonical_key(v.curve), v);
            for (auto& v : enumerate_vertices(r3.L, 6))
                set3.emplace(canonical_key(v.curve), v);
            const auto& e2 = r3.region(2, Sign::Minus);
            std::int64_t hits = 0;
            for (const auto& [key, v] : set3) {
                if (v.side != CompressionSide::Above) continue;
                if (geometric_intersection(v.curve, r3.disk(2, Sign::Minus)) != 0) continue;
                if (region_side(v.curve, e2) != RegionSide::Outside) continue;
                ++hits;
                ck.expect(is_isotopic(v.curve, r3.disk(3, Sign::Plus)),
                          "outside-E_2 witness is not D_3^+");
            }
            rep.counts["outside_e2_instances"] = hits;
        }
    }

    { // V6: the complete n=1 picture.
        detail::Checker ck{rep, "V6"};
        auto L1 = build_layout(1);
        auto vs = enumerate_vertices(L1, 12);
        ck.expect(vs.size() == 2, "n=1 expects exactly 2 classes, got " +
                                      std::to_string(vs.size()));
        if (vs.size() == 2) {
            ck.expect(geometric_intersection(vs[0].curve, vs[1].curve) == 2,
                      "n=1 pair must intersect twice");
            auto cs = build_complex(vs, 1);
            ck.expect(cs.edges.empty(), "n=1 graph must be discrete");
            ck.expect(homology_ranks(cs, 0) == std::vector<int>{1},
                      "n=1 complex must be disconnected");
        }
        rep.counts["n1_vertices"] = (std::int64_t)vs.size();
    }

    { // V7: octahedral spheres for n = 2..4.
        detail::Checker ck{rep, "V7"};
        for (int n = 2; n <= 4; ++n) {
            auto oct = octahedron(build_layout(n));
            ck.expect((int)oct.simplices.back().size() == (1 << n),
                      "n=" + std::to_string(n) + " wrong top simplex count");
            std::vector<int> want(n, 0);
            want[n - 1] = 1;
            ck.expect(homology_ranks(oct, n - 1) == want,
                      "n=" + std::to_string(n) + " wrong Betti profile");
        }
    }

    { // V8: the retraction is simplicial on the truncated complex.
        detail::Checker ck{rep, "V8"};
        auto cs = build_complex(pool, dim_cap);
        std::map<std::string, ClassLabel> label_of;
        for (size_t k = 0; k < pool.size(); ++k)
            label_of[canonical_key(pool[k].curve)] = labels[k];
        for (int d = 1; d < (int)cs.simplices.size(); ++d)
            for (const auto& sx : cs.simplices[d]) {
                // Image classes must be pairwise non-antipodal, i.e. span a
                // simplex of the octahedron.
                for (size_t a = 0; a < sx.size(); ++a)
                    for (size_t b = a + 1; b < sx.size(); ++b) {
                        auto la = label_of[canonical_key(cs.vertices[sx[a]].curve)];
                        auto lb = label_of[canonical_key(cs.vertices[sx[b]].curve)];
                        ck.expect(!antipodal(la, lb), "simplex image is not a simplex");
                    }
            }
        for (int i = 1; i <= cfg.n; ++i)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                auto v = make_vertex(refs.disk(i, s));
                auto r = retraction_image(v, refs);
                ck.expect(is_isotopic(r.curve, v.curve),
                          "retraction moves an octahedron vertex");
            }
        rep.counts["simplices"] = (std::int64_t)[&] {
            std::int64_t t = 0;
            for (const auto& dim : cs.simplices) t += (std::int64_t)dim.size();
            return t;
        }();
    }

    { // V9: randomized equivariance plus abelianization consistency.
        detail::Checker ck{rep, "V9"};
        auto r2 = equivariance_suite(2, cfg.seed, 500);
        ck.expect(r2.failures == 0,
                  r2.witnesses.empty() ? "n=2 failures" : r2.witnesses.front());
        auto r3 = equivariance_suite(3, cfg.seed + 1, 200);
        ck.expect(r3.failures == 0,
                  r3.witnesses.empty() ? "n=3 failures" : r3.witnesses.front());
        for (const auto& v : pool) {
            // On the sphere the product of all meridians is trivial, so the
            // free abelianization is a one-side indicator only up to a
            // multiple of the all-ones vector.
            auto ab = abelianization(peripheral_word(v.curve), 2 * cfg.n + 2);
            auto [pa, pb] = puncture_partition(v.curve);
            int lo = *std::min_element(ab.begin(), ab.end());
            int hi = *std::max_element(ab.begin(), ab.end());
            std::vector<int> hit;
            for (int j = 0; j < 2 * cfg.n + 2; ++j)
                if (ab[j] == hi) hit.push_back(j);
            ck.expect(hi - lo == 1 && (hit == pa || hit == pb),
                      "abelianization is not a one-side indicator");
        }
        rep.counts["equivariance_trials"] = 700;
    }

    { // V10: determinism of the core computation.
        detail::Checker ck{rep, "V10"};
        auto run_once = [&]() {
            auto orbit = twist_orbit(refs.L, std::min(cfg.twist_depth, 2));
            auto cs = build_complex(orbit, dim_cap);
            return complex_to_json(cs, homology_ranks(cs, std::max(0, (int)cs.simplices.size() - 2)))
                .dump();
        };
        ck.expect(run_once() == run_once(), "repeated core runs differ");
    }

    return rep;
}

} // namespace dcx

#endif
