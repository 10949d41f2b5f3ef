// Command-line front end: layout | refs | classify | enumerate | complex |
// verify | oracle-check. All output is machine readable and deterministic
// for fixed flags. Exit codes: 0 success, 1 failed check or data error,
// 2 usage error, 3 unclassifiable input.

#include <fstream>
#include <iostream>
#include <cmath>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dcx/verify.hpp"

namespace {

using dcx::json;

struct Out {
    std::string path; // empty = stdout
    void write(const std::string& data) const {
        if (path.empty() || path == "-") {
            std::cout << data;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw dcx::Error(dcx::Errc::Malformed, "cannot open output file " + path);
        f << data;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw dcx::Error(dcx::Errc::Malformed, "cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// A static figure of the disjointness graph: vertices on a circle,
// edges as straight lines.
std::string complex_to_svg(const dcx::ComplexSlice& cs) {
    const double R = 220, C = 256;
    size_t m = cs.vertices.size();
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
    auto pos = [&](size_t k) {
        double a = 2 * 3.14159265358979323846 * (double)k / (double)(m ? m : 1);
        return std::pair<double, double>{C + R * std::cos(a), C + R * std::sin(a)};
    };
    for (const auto& e : cs.edges) {
        auto [xa, ya] = pos((size_t)e.first);
        auto [xb, yb] = pos((size_t)e.second);
        s << "  <line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xb
          << "\" y2=\"" << yb << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
    for (size_t k = 0; k < m; ++k) {
        auto [x, y] = pos(k);
        s << "  <circle cx=\"" << x << "\" cy=\"" << y
          << "\" r=\"6\" fill=\"#1f6fb2\"/>\n  <text x=\"" << x + 9 << "\" y=\"" << y + 4
          << "\" font-size=\"11\" font-family=\"monospace\">" << k << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bridge-sphere curve and disk-complex toolkit"};
    app.require_subcommand(1);

    dcx::RunConfig cfg;
    std::string out_path, curve_path = "-", format = "json";
    int samples = 200;

    auto add_common = [&](CLI::App* sc, bool scale) {
        sc->add_option("--n", cfg.n, "number of twist regions")->check(CLI::PositiveNumber);
        sc->add_option("--out", out_path, "output file (default stdout)");
        sc->add_option("--jobs", cfg.jobs, "worker cap; never affects output")
            ->check(CLI::PositiveNumber);
        if (scale) {
            sc->add_option("--max-weight", cfg.max_weight, "enumeration weight bound")
                ->check(CLI::PositiveNumber);
            sc->add_option("--twist-depth", cfg.twist_depth, "orbit closure depth")
                ->check(CLI::NonNegativeNumber);
            sc->add_option("--seed", cfg.seed, "master RNG seed (default 0)");
            sc->add_option("--dim-cap", cfg.dim_cap, "top simplex dimension (default n)");
        }
    };

    auto* sc_layout = app.add_subcommand("layout", "print the segment/puncture layout");
    add_common(sc_layout, false);
    auto* sc_refs = app.add_subcommand("refs", "print all reference curves and regions");
    add_common(sc_refs, false);
    auto* sc_classify = app.add_subcommand("classify", "label one curve by its class");
    add_common(sc_classify, false);
    sc_classify->add_option("--curve", curve_path, "curve JSON file, or - for stdin");
    auto* sc_enum = app.add_subcommand("enumerate", "list essential compressing vertices");
    add_common(sc_enum, true);
    auto* sc_complex = app.add_subcommand("complex", "build the disjointness complex");
    add_common(sc_complex, true);
    sc_complex->add_option("--format", format, "json | dot | svg")
        ->check(CLI::IsMember({"json", "dot", "svg"}));
    auto* sc_verify = app.add_subcommand("verify", "run the full acceptance battery");
    add_common(sc_verify, true);
    auto* sc_oracle = app.add_subcommand("oracle-check", "cross-check against the arc oracle");
    add_common(sc_oracle, false);
    sc_oracle->add_option("--samples", samples, "randomized trials")->check(CLI::PositiveNumber);
    sc_oracle->add_option("--seed", cfg.seed, "master RNG seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help/diagnostics to the right stream
        return rc == 0 ? 0 : 2;
    }
    Out out{out_path};

    try {
        if (*sc_layout) {
            out.write(dcx::layout_to_json(dcx::build_layout(cfg.n)).dump(2) + "\n");
            return 0;
        }
        if (*sc_refs) {
            dcx::ReferenceSet refs(cfg.n);
            std::string buf;
            for (int i = 1; i <= cfg.n; ++i)
                for (dcx::Sign s : {dcx::Sign::Plus, dcx::Sign::Minus}) {
                    json rec{{"i", i},
                             {"side", dcx::sign_name(s)},
                             {"curve", dcx::curve_to_json(refs.disk(i, s))},
                             {"region", dcx::region_to_json(refs.region(i, s))}};
                    buf += rec.dump() + "\n";
                }
            out.write(buf);
            return 0;
        }
        if (*sc_classify) {
            auto c = dcx::curve_from_json(json::parse(read_input(curve_path)));
            if ((int)c.n != cfg.n && !sc_classify->count("--n")) cfg.n = (int)c.n;
            dcx::ReferenceSet refs(cfg.n);
            auto v = dcx::make_vertex(c);
            auto l = dcx::classify(v, refs);
            json rec{{"label", dcx::label_to_json(l)},
                     {"side", v.side == dcx::CompressionSide::Above ? "above" : "below"}};
            out.write(rec.dump() + "\n");
            return 0;
        }
        if (*sc_enum) {
            auto L = dcx::build_layout(cfg.n);
            auto vs = dcx::enumerate_vertices(L, cfg.max_weight);
            std::string buf;
            for (const auto& v : vs) buf += dcx::vertex_to_json(v).dump() + "\n";
            out.write(buf);
            return 0;
        }
        if (*sc_complex) {
            auto L = dcx::build_layout(cfg.n);
            auto vs = dcx::enumerate_vertices(L, cfg.max_weight);
            int cap = cfg.dim_cap < 0 ? cfg.n : cfg.dim_cap;
            auto cs = dcx::build_complex(vs, cap);
            auto betti =
                dcx::homology_ranks(cs, std::max(0, (int)cs.simplices.size() - 2));
            if (format == "dot")
                out.write(dcx::complex_to_dot(cs));
            else if (format == "svg")
                out.write(complex_to_svg(cs));
            else
                out.write(dcx::complex_to_json(cs, betti).dump(2) + "\n");
            return 0;
        }
        if (*sc_verify) {
            auto rep = dcx::verify_suite(cfg);
            out.write(dcx::report_to_json(rep).dump(2) + "\n");
            return rep.all_pass() ? 0 : 1;
        }
        if (*sc_oracle) {
            // Reference pairs: the geometric count must match the arc-overlap
            // oracle exactly. Randomized trials: twist-equivariance of the
            // geometric invariants.
            auto L = dcx::build_layout(cfg.n);
            int mismatches = 0;
            for (int i = 1; i <= cfg.n; ++i)
                for (dcx::Sign si : {dcx::Sign::Plus, dcx::Sign::Minus})
                    for (int j = 1; j <= cfg.n; ++j)
                        for (dcx::Sign sj : {dcx::Sign::Plus, dcx::Sign::Minus}) {
                            int g = dcx::geometric_intersection(
                                dcx::reference_curve(L, i, si),
                                dcx::reference_curve(L, j, sj));
                            int o = dcx::arc_pair_intersection(
                                dcx::reference_interval(L, i, si),
                                dcx::reference_interval(L, j, sj));
                            if (g != o) ++mismatches;
                        }
            auto eq = dcx::equivariance_suite(cfg.n, cfg.seed, samples);
            json rec{{"n", cfg.n},
                     {"samples", samples},
                     {"seed", cfg.seed},
                     {"reference_mismatches", mismatches},
                     {"equivariance_failures", eq.failures},
                     {"witnesses", eq.witnesses}};
            out.write(rec.dump(2) + "\n");
            return (mismatches == 0 && eq.failures == 0) ? 0 : 1;
        }
    } catch (const dcx::Error& e) {
        std::cout << dcx::error_to_json(e).dump() << "\n";
        return e.code() == dcx::Errc::Unclassifiable ? 3 : 1;
    } catch (const json::exception& e) {
        std::cout << json{{"error", "Malformed"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
