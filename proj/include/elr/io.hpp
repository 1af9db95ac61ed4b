#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "elr/leveling.hpp"
#include "elr/plane_graph.hpp"

namespace elr {

inline constexpr const char* tool_version = "1.0.0";

using json = nlohmann::ordered_json;

// FNV-1a over bytes, rendered as "fnv1a:<16 hex digits>"
std::string content_hash(const std::string& bytes);

struct run_manifest {
    std::string command;
    json parameters = json::object();
    std::optional<std::uint64_t> seed;
    std::optional<std::string> input_hash;
    std::string version = tool_version;

    json to_json() const;
};

// graph files: {"vertices":[...], "edges":[[u,v]...], "rotation":{"v":[...]},
// "outer_face":[...]} in canonical order, plus optional "family" and "manifest"
json graph_to_json(const plane_graph& g);
plane_graph graph_from_json(const json& j);

// level-drawing files: {"levels":{"v":int}, "order":{"level":[v...]},
// "gaps":{"u-v":{"level":pos}}} with levels normalized to start at 0, plus the
// graph embedded under "graph"
json level_drawing_to_json(const level_drawing& d);
level_drawing level_drawing_from_json(const json& j, const plane_graph* graph_override = nullptr);

// straight-line files: {"coords":{"v":["x/1","y/1"]}} plus embedded "graph";
// all coordinates exact "p/q" strings
json straight_line_to_json(const straight_line_drawing& d);
straight_line_drawing straight_line_from_json(const json& j,
                                              const plane_graph* graph_override = nullptr);

// SVG 1.1 rendering; for leveled input, guide lines are drawn per level
std::string render_svg(const straight_line_drawing& d, double scale = 60.0);

} // namespace elr
