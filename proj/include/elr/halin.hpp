#pragma once

#include <map>
#include <set>
#include <vector>

#include "elr/families.hpp"
#include "elr/leveling.hpp"

namespace elr {

struct rooted_tree {
    vid root = -1;
    std::map<vid, std::vector<vid>> children; // left-to-right
    std::map<vid, vid> parent;                // root absent

    bool is_leaf(vid v) const;
    std::vector<vid> leaves_in_order() const; // left-to-right
    std::vector<vid> vertices() const;
};

// root the characteristic tree of h so that the cyclically consecutive
// non-sibling outer pair (v_l, v_r) become the leftmost and rightmost leaves;
// among admissible pairs the lexicographically smallest is chosen
rooted_tree root_characteristic_tree(const halin_structure& h);

// root an abstract tree (cyclic neighbor orders) at `root`, choosing the cyclic
// start of each child list so that `leftmost_leaf` comes first; the root's
// child order starts after `after` when given
rooted_tree root_tree(const free_tree& t, vid root, vid leftmost_leaf);

struct characteristic_decomposition {
    std::vector<std::vector<vid>> paths; // path 0 = external path of the whole tree
    std::map<vid, int> path_of;
    std::vector<std::vector<vid>> tufts; // leaf groups in left-to-right order
    std::set<vid> pruned_vertices;       // vertex set of the leafless tree
};

characteristic_decomposition decompose(const rooted_tree& t);

// tufts straight from the definition: >= 2 leaves sharing a parent that has at
// most one internal neighbor (brute-force oracle for the decomposition)
std::vector<std::set<vid>> brute_force_tufts(const free_tree& t);

// leaves of the tree obtained by deleting all leaves (single vertex counts 1)
int pruned_leaf_count(const free_tree& t);

struct aux_tree {
    int root = 0;
    std::map<int, std::vector<int>> children; // node = path index
    std::map<int, int> depth;
};

aux_tree build_aux(const rooted_tree& t, const characteristic_decomposition& dec);

// 1-SWLP drawing of the characteristic tree alone: level = auxiliary-tree depth
// of the vertex's path, with the leftmost/rightmost leaves promoted to the ends
// of the top level
level_drawing layout_characteristic(const rooted_tree& t);

// 1-SWLP drawing of the whole Halin graph (tree + adjoint cycle)
level_drawing draw_halin(const halin_structure& h);

// 2-SWLP drawing of a generalized Halin graph: draw the smoothed core, double
// the level count by interposition, and place each subdivision chain on the
// interposed level along its core edge
level_drawing draw_generalized_halin(const plane_graph& g);

} // namespace elr
