#ifndef DCX_JSON_IO_HPP
#define DCX_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dcx/classifier.hpp"
#include "dcx/complex.hpp"
#include "dcx/curve.hpp"
#include "dcx/errors.hpp"
#include "dcx/tangle.hpp"

namespace dcx {

using json = nlohmann::ordered_json;

inline json curve_to_json(const Curve& c) {
    json j;
    j["n"] = c.n;
    j["weights"] = c.weights;
    auto chords = [](const std::vector<Chord>& v) {
        json out = json::array();
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& ch : sorted)
            out.push_back({{ch[0].seg, ch[0].idx}, {ch[1].seg, ch[1].idx}});
        return out;
    };
    j["inner"] = chords(c.inner);
    j["outer"] = chords(c.outer);
    return j;
}

inline Curve curve_from_json(const json& j) {
    check(j.is_object() && j.contains("n") && j.contains("weights") && j.contains("inner") &&
              j.contains("outer"),
          Errc::Malformed, "curve JSON needs n, weights, inner, outer");
    Curve c;
    try {
        c.n = j.at("n").get<int>();
        c.weights = j.at("weights").get<std::vector<int>>();
        auto chords = [](const json& arr) {
            std::vector<Chord> out;
            for (const auto& ch : arr) {
                check(ch.is_array() && ch.size() == 2, Errc::Malformed, "chord must be a pair");
                auto pt = [](const json& p) -> Pt {
                    check(p.is_array() && p.size() == 2, Errc::Malformed,
                          "point must be [segment, index]");
                    return {p[0].get<int>(), p[1].get<int>()};
                };
                out.push_back(make_chord(pt(ch[0]), pt(ch[1])));
            }
            return out;
        };
        c.inner = chords(j.at("inner"));
        c.outer = chords(j.at("outer"));
    } catch (const json::exception&) {
        throw Error(Errc::Malformed, "curve JSON has wrong field types");
    }
    return validate(c);
}

inline json label_to_json(const ClassLabel& l) {
    return json{{"i", l.i}, {"side", sign_name(l.side)}};
}

inline json vertex_to_json(const DiskVertex& v) {
    json j = curve_to_json(v.curve);
    j["side"] = v.side == CompressionSide::Above ? "above" : "below";
    if (v.label) j["label"] = label_to_json(*v.label);
    return j;
}

inline json layout_to_json(const BridgeLayout& L) {
    json segs = json::array();
    for (int j = 0; j < L.seg_count(); ++j)
        segs.push_back({{"index", j},
                        {"side", seg_side_name(L.segments[j].side)},
                        {"bridge", L.segments[j].bridge}});
    return json{{"n", L.n}, {"punctures", L.puncture_count}, {"segments", segs}};
}

inline json region_to_json(const Region& r) {
    return json{{"i", r.index},
                {"side", sign_name(r.side)},
                {"boundary", curve_to_json(r.boundary)},
                {"punctures_inside", r.punctures_inside}};
}

inline json complex_to_json(const ComplexSlice& cs, const std::vector<int>& betti) {
    json verts = json::array();
    for (const auto& v : cs.vertices) verts.push_back(vertex_to_json(v));
    json edges = json::array();
    for (auto [a, b] : cs.edges) edges.push_back({a, b});
    return json{{"vertices", verts}, {"edges", edges}, {"betti", betti}};
}

inline json error_to_json(const Error& e) {
    return json{{"error", errc_name(e.code())}, {"message", e.what()}};
}

/// Graphviz view of the disjointness graph.
inline std::string complex_to_dot(const ComplexSlice& cs) {
    std::string s = "graph disjointness {\n";
    for (int i = 0; i < (int)cs.vertices.size(); ++i) {
        const auto& v = cs.vertices[i];
        std::string name = "v" + std::to_string(i);
        std::string lab = v.side == CompressionSide::Above ? "above" : "below";
        if (v.label)
            lab = "D_" + std::to_string(v.label->i) + sign_name(v.label->side);
        s += "  " + name + " [label=\"" + lab + "\"];\n";
    }
    for (auto [a, b] : cs.edges)
        s += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

} // namespace dcx

#endif
