#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elr/leveling.hpp"
#include "elr/plane_graph.hpp"

namespace elr {

// the planar 3-tree chain: apex a joined to nested triangles (a, b_i, c_i)
struct lower_bound_chain {
    int k = 0;
    vid apex = 0;
    std::vector<vid> b, c; // b[i-1] = b_i, c[i-1] = c_i
    plane_graph graph;
};

lower_bound_chain gen_lower_bound_chain(int k);

// reference straight-line drawing of the chain (apex on top, rails on a parabola)
straight_line_drawing chain_reference_drawing(const lower_bound_chain& ch);

// two chain copies glued into the two bounded K4 faces next to the hub; 4k vertices
plane_graph gen_lower_bound_glued(int k);

// repeatedly remove a degree-3 vertex with a triangle neighborhood; true iff a
// triangle remains
bool is_planar_3tree(const plane_graph& g);

// peeling order that never removes a designated outer-face vertex; empty when
// the graph is not a planar 3-tree with that outer triangle
std::vector<vid> peel_order_keeping_outer(const plane_graph& g);

struct halin_structure {
    plane_graph graph;
    std::set<edge> tree_edges;
    std::vector<vid> cycle;  // adjoint cycle = outer walk
    bool trivial = false;    // wheel
    bool is_k4 = false;
};

halin_structure recognize_halin(const plane_graph& g);

// subdivision chains of the smoothed core, keyed by core edge; chain vertices
// listed from the smaller core endpoint to the larger
struct subdivision_record {
    std::map<edge, std::vector<vid>> chains;
};

std::pair<halin_structure, subdivision_record>
recognize_generalized_halin(const plane_graph& g);

struct two_outer_structure {
    plane_graph graph;
    std::string kind; // cycle-cycle | outerplanar-cycle | cycle-caterpillar | outerplanar-caterpillar
    std::vector<vid> inner_cycle;            // cycle kinds, cyclic order
    std::vector<vid> spine;                  // caterpillar kinds, path order
    std::map<vid, std::vector<vid>> leaves;  // caterpillar kinds: spine vertex -> leaves
};

two_outer_structure recognize_two_outer(const plane_graph& g);

// add mixed edges until every internal face not bounded by the inner part is a
// triangle (cycle kinds) / no further outer-inner edge can be added without
// multi-edges (caterpillar kinds); embedding-respecting and idempotent
two_outer_structure triangulate_pockets(const two_outer_structure& s);

// ---- random generators (deterministic per seed) ----

// random Halin graph on exactly n >= 4 vertices; n = 4 gives K4
plane_graph gen_random_halin(int n, std::uint64_t seed);

// random generalized Halin graph: random Halin graph on roughly n vertices with
// random subdivisions of non-outer edges; force_k4_core keeps the core at K4
plane_graph gen_random_generalized_halin(int n, std::uint64_t seed, bool force_k4_core = false);

// triangulated annulus: outer cycle of h vertices, inner cycle of k vertices
plane_graph gen_random_cycle_cycle(int h, int k, std::uint64_t seed);

struct caterpillar_params {
    int outer_size = 8;      // outer cycle length
    int spine_size = 3;      // caterpillar spine length (1 = star/wheel-like)
    int leaf_count = 4;      // caterpillar leaves inserted into triangular faces
    int side_leaf_count = 0; // extra leaves sharing a face with one outer vertex only
};

plane_graph gen_random_cycle_caterpillar(const caterpillar_params& p, std::uint64_t seed);

struct attachment_params {
    int attachment_count = 3; // pockets glued onto outer edges
    int max_pocket_size = 6;  // extra vertices per pocket
};

// glue random outerplanar pockets onto outer edges of a cycle-cycle or
// cycle-caterpillar core
plane_graph gen_random_outerplanar_attachment(const plane_graph& core,
                                              const attachment_params& p,
                                              std::uint64_t seed);

// random connected outerplanar graph on n vertices (polygon triangulation with
// random chord deletions and pendant trees)
plane_graph gen_random_outerplanar(int n, std::uint64_t seed);

// random characteristic tree: unrooted tree whose internal vertices all have
// degree >= 3, with a planted cyclic leaf order
struct free_tree {
    std::vector<vid> vertices;
    std::map<vid, std::vector<vid>> adj; // cyclic neighbor order
};

free_tree gen_random_characteristic_tree(int n, std::uint64_t seed);

} // namespace elr
