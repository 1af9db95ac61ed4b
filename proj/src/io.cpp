#include "elr/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "elr/error.hpp"

namespace elr {

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json run_manifest::to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    if (seed) j["seed"] = *seed;
    if (input_hash) j["input_hash"] = *input_hash;
    j["version"] = version;
    return j;
}

json graph_to_json(const plane_graph& g) {
    plane_graph c = g;
    canonicalize(c);
    json j;
    j["vertices"] = c.vertices;
    json ed = json::array();
    for (const edge& e : c.edges) ed.push_back(json::array({e.first, e.second}));
    j["edges"] = ed;
    json rot = json::object();
    for (vid v : c.vertices) rot[std::to_string(v)] = c.rotation.at(v);
    j["rotation"] = rot;
    j["outer_face"] = c.outer_face;
    return j;
}

namespace {

int parse_int_key(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::runtime_error("bad integer key: " + s);
    return v;
}

} // namespace

plane_graph graph_from_json(const json& j) {
    plane_graph g;
    g.vertices = j.at("vertices").get<std::vector<vid>>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("edge entries must be pairs");
        g.edges.push_back(mk_edge(e.at(0).get<vid>(), e.at(1).get<vid>()));
    }
    for (const auto& [key, nbrs] : j.at("rotation").items())
        g.rotation[parse_int_key(key)] = nbrs.get<std::vector<vid>>();
    g.outer_face = j.at("outer_face").get<std::vector<vid>>();
    canonicalize(g);
    return g;
}

namespace {

std::string edge_key(const edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

edge parse_edge_key(const std::string& s) {
    std::size_t dash = s.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
        throw std::runtime_error("bad edge key: " + s);
    return mk_edge(parse_int_key(s.substr(0, dash)), parse_int_key(s.substr(dash + 1)));
}

} // namespace

json level_drawing_to_json(const level_drawing& d) {
    level_drawing c = d;
    normalize_levels(c);
    json j;
    json lv = json::object();
    for (const auto& [v, l] : c.level) lv[std::to_string(v)] = l;
    j["levels"] = lv;
    json od = json::object();
    for (const auto& [l, row] : c.order) od[std::to_string(l)] = row;
    j["order"] = od;
    json gp = json::object();
    for (const auto& [e, crossings] : c.gaps) {
        json per = json::object();
        for (const auto& [l, p] : crossings) per[std::to_string(l)] = p;
        gp[edge_key(e)] = per;
    }
    j["gaps"] = gp;
    j["graph"] = graph_to_json(c.graph);
    return j;
}

level_drawing level_drawing_from_json(const json& j, const plane_graph* graph_override) {
    level_drawing d;
    d.graph = graph_override ? *graph_override : graph_from_json(j.at("graph"));
    for (const auto& [key, l] : j.at("levels").items())
        d.level[parse_int_key(key)] = l.get<int>();
    for (const auto& [key, row] : j.at("order").items())
        d.order[parse_int_key(key)] = row.get<std::vector<vid>>();
    if (j.contains("gaps"))
        for (const auto& [key, crossings] : j.at("gaps").items()) {
            edge e = parse_edge_key(key);
            for (const auto& [lk, p] : crossings.items())
                d.gaps[e][parse_int_key(lk)] = p.get<int>();
        }
    return d;
}

json straight_line_to_json(const straight_line_drawing& d) {
    json j;
    json co = json::object();
    for (const auto& [v, p] : d.coords)
        co[std::to_string(v)] = json::array({format_rat(p.x), format_rat(p.y)});
    j["coords"] = co;
    j["graph"] = graph_to_json(d.graph);
    return j;
}

straight_line_drawing straight_line_from_json(const json& j,
                                              const plane_graph* graph_override) {
    straight_line_drawing d;
    d.graph = graph_override ? *graph_override : graph_from_json(j.at("graph"));
    for (const auto& [key, xy] : j.at("coords").items()) {
        if (!xy.is_array() || xy.size() != 2)
            throw std::runtime_error("coordinate entries must be pairs");
        d.coords[parse_int_key(key)] = {parse_rat(xy.at(0).get<std::string>()),
                                        parse_rat(xy.at(1).get<std::string>())};
    }
    return d;
}

} // namespace elr
