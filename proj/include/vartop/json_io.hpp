#pragma once
// Network files: a surface with cuts plus an embedded network, as one JSON
// object. Coordinates and weights are exact; anything non-integral is kept
// as a "num/den" string so files round-trip without loss. A weight may also
// be a symbol name, which makes the edge formal for symbolic measurement.

#include "network.hpp"

#include <json.hpp>

#include <fstream>

namespace vartop {

using nlohmann::json;

inline json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        auto num = numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return (std::int64_t)num;
    }
    return r.str();
}

inline Rat rat_from_json(const json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Rat((std::int64_t)j);
        if (j.is_string()) return Rat(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw Error("BadNetworkFile",
                std::string(what) + " must be an integer or a \"num/den\" string");
}

inline json point_to_json(const Point& p) {
    return json::array({rat_to_json(p.x), rat_to_json(p.y)});
}

inline Point point_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw Error("BadNetworkFile", std::string(what) + " must be [x, y]");
    return {rat_from_json(j[0], what), rat_from_json(j[1], what)};
}

inline json polyline_to_json(const Polyline& p) {
    json a = json::array();
    for (const Point& q : p) a.push_back(point_to_json(q));
    return a;
}

inline Polyline polyline_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw Error("BadNetworkFile", std::string(what) + " must be a point list");
    Polyline p;
    for (const json& q : j) p.push_back(point_from_json(q, what));
    return p;
}

struct NetFile {
    SurfaceWithCuts surface;
    EmbeddedNetwork net;
};

inline json net_to_json(const SurfaceWithCuts& S, const EmbeddedNetwork& N) {
    json holes = json::array(), cuts = json::array();
    for (const Polyline& h : S.holes) holes.push_back(polyline_to_json(h));
    for (const Polyline& c : S.cuts) cuts.push_back(polyline_to_json(c));
    json vertices = json::array();
    for (const NetVertex& v : N.vertices)
        vertices.push_back({{"pos", point_to_json(v.pos)},
                            {"role", role_name(v.role)}});
    json edges = json::array();
    for (const NetEdge& e : N.edges)
        edges.push_back(
            {{"from", e.from},
             {"to", e.to},
             {"polyline", polyline_to_json(e.polyline)},
             {"weight", e.symbol.empty() ? e.weight.str() : e.symbol}});
    return {{"surface",
             {{"outer", polyline_to_json(S.outer)},
              {"holes", holes},
              {"cuts", cuts},
              {"basepoint", point_to_json(S.basepoint)}}},
            {"vertices", vertices},
            {"edges", edges}};
}

inline NetFile net_from_json(const json& j) {
    if (!j.is_object() || !j.contains("surface") || !j.contains("vertices") ||
        !j.contains("edges"))
        throw Error("BadNetworkFile",
                    "expected surface, vertices and edges members");
    const json& sj = j["surface"];
    for (const char* key : {"outer", "holes", "cuts", "basepoint"})
        if (!sj.contains(key))
            throw Error("BadNetworkFile",
                        std::string("surface needs a ") + key + " member");
    std::vector<Polyline> holes, cuts;
    for (const json& h : sj["holes"]) holes.push_back(polyline_from_json(h, "hole"));
    for (const json& c : sj["cuts"]) cuts.push_back(polyline_from_json(c, "cut"));
    SurfaceWithCuts S(polyline_from_json(sj["outer"], "outer"), holes, cuts,
                      point_from_json(sj["basepoint"], "basepoint"));

    EmbeddedNetwork N;
    for (const json& vj : j["vertices"]) {
        if (!vj.contains("pos") || !vj.contains("role") || !vj["role"].is_string())
            throw Error("BadNetworkFile", "vertex needs pos and role");
        VertexRole role;
        try {
            role = role_from_name(vj["role"].get<std::string>());
        } catch (const Error& e) {
            throw Error("BadNetworkFile", e.what());
        }
        N.vertices.push_back({point_from_json(vj["pos"], "vertex pos"), role});
    }
    for (const json& ej : j["edges"]) {
        for (const char* key : {"from", "to", "polyline", "weight"})
            if (!ej.contains(key))
                throw Error("BadNetworkFile",
                            std::string("edge needs a ") + key + " member");
        if (!ej["from"].is_number_integer() || !ej["to"].is_number_integer())
            throw Error("BadNetworkFile", "edge endpoints must be vertex ids");
        NetEdge e;
        e.from = ej["from"];
        e.to = ej["to"];
        if (e.from < 0 || e.from >= (int)N.vertices.size() || e.to < 0 ||
            e.to >= (int)N.vertices.size())
            throw Error("BadNetworkFile", "edge endpoint out of range");
        e.polyline = polyline_from_json(ej["polyline"], "edge polyline");
        const json& w = ej["weight"];
        if (w.is_string() && !w.get<std::string>().empty() &&
            !std::isdigit((unsigned char)w.get<std::string>()[0]) &&
            w.get<std::string>()[0] != '-') {
            e.symbol = w.get<std::string>();
            e.weight = 1;
        } else {
            e.weight = rat_from_json(w, "edge weight");
        }
        N.edges.push_back(std::move(e));
    }
    return {std::move(S), std::move(N)};
}

inline NetFile load_net(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadNetworkFile", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("BadNetworkFile", e.what());
    }
    return net_from_json(j);
}

inline void save_net(const std::string& path, const SurfaceWithCuts& S,
                     const EmbeddedNetwork& N) {
    std::ofstream out(path);
    if (!out) throw Error("BadNetworkFile", "cannot open " + path);
    out << net_to_json(S, N).dump(1) << "\n";
}

} // namespace vartop
