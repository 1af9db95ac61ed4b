#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "elr/error.hpp"
#include "elr/geometry.hpp"

namespace elr {

using vid = int;
using edge = std::pair<vid, vid>; // normalized u < v

inline edge mk_edge(vid u, vid v) { return u < v ? edge{u, v} : edge{v, u}; }

// embedded planar graph: rotations are counterclockwise cyclic neighbor orders,
// the outer face is stored as its boundary walk (clockwise under this convention)
struct plane_graph {
    std::vector<vid> vertices;     // ascending
    std::vector<edge> edges;       // lexicographic
    std::map<vid, std::vector<vid>> rotation;
    std::vector<vid> outer_face;

    bool has_vertex(vid v) const;
    bool has_edge(vid u, vid v) const;
    int degree(vid v) const;
    const std::vector<vid>& neighbors(vid v) const; // rotation order
    std::size_t n() const { return vertices.size(); }
    std::size_t m() const { return edges.size(); }
};

struct face_set {
    std::vector<std::vector<vid>> faces; // cyclic walks, traced with the face on the left
    int outer_index = -1;
};

// structural validation: rotation symmetric and matching the edge set, graph
// connected, Euler-consistent face traversal, outer_face an actual face
void validate_graph(const plane_graph& g);

face_set extract_faces(const plane_graph& g);

// remove degree-2 vertex v, joining its two neighbors at the vacated rotation slots
plane_graph smooth_vertex(const plane_graph& g, vid v);

// replace edge e by a path through `count` fresh vertices (ids allocated from
// max id + 1 upward); new ids are reported in order from e.first to e.second
plane_graph subdivide_edge(const plane_graph& g, edge e, int count,
                           std::vector<vid>* new_ids = nullptr);

enum class edge_class { outer, inner, mixed };

struct vertex_classes {
    std::set<vid> outer_vertices;
    std::set<vid> inner_vertices;
    std::map<edge, edge_class> edge_kind;
};

vertex_classes classify_vertices(const plane_graph& g);

// build embedding from exact coordinates of a plane straight-line drawing:
// rotations by angular sort, outer face located from the bottommost vertex
plane_graph plane_graph_from_coords(const std::vector<vid>& vertices,
                                    const std::vector<edge>& edges,
                                    const std::map<vid, point>& coords);

// build embedding from a complete list of face walks (inner walks
// counterclockwise, outer walk clockwise)
plane_graph plane_graph_from_faces(const std::vector<std::vector<vid>>& faces,
                                   int outer_index);

// rotate rotations to start at the smallest neighbor and the outer walk to its
// lexicographically smallest starting point; sort vertex and edge lists
void canonicalize(plane_graph& g);

bool same_cyclic_sequence(const std::vector<vid>& a, const std::vector<vid>& b);

} // namespace elr
