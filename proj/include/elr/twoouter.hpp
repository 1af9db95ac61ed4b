#pragma once

#include <map>
#include <vector>

#include "elr/families.hpp"
#include "elr/leveling.hpp"

namespace elr {

struct attachment_component {
    plane_graph block;  // outerplanar attachment, includes the shared edge
    edge shared;        // edge on the core's outer boundary
};

struct attachment_decomposition {
    two_outer_structure core;
    std::vector<attachment_component> components; // ordered by smallest vertex id
};

attachment_decomposition decompose_attachments(const plane_graph& g);

// merge attachment drawings into a finished core drawing: attachments on a
// seam inside one boundary row hang below (or above) it, attachments on the
// two tall seam edges hang alongside with their long edges rerouted past the
// core rows; the result draws `whole`
level_drawing glue_attachments(const level_drawing& core,
                               const std::vector<attachment_component>& components,
                               const plane_graph& whole);

// 3-SWLP drawing of a cycle-cycle graph: the outer vertex u_1 adjacent to at
// least two inner vertices goes alone on the top level, the inner cycle splits
// over the two middle levels, the remaining outer cycle fills the bottom level
level_drawing draw_cycle_cycle(const two_outer_structure& s);

// 3-SWLP drawing: cycle-cycle core plus outerplanar attachments glued onto
// outer edges (below for flat edges, alongside the two tall edges at u_1)
level_drawing draw_outerplanar_cycle(const plane_graph& g);

enum class mixed_side { extreme, left, right };

struct mixed_classification {
    std::map<edge, mixed_side> side;  // mixed edges of the leaf-stripped graph
    std::vector<vid> both_sided;      // outer vertices with left and right edges
    // landmarks: last spine vertex seen from u_1 on each side, first spine
    // vertex seen from u_i on each side (-1 when absent)
    vid v_l1 = -1, v_r1 = -1, v_l2 = -1, v_r2 = -1;
};

mixed_classification classify_mixed(const two_outer_structure& s);

// 4-SWLP drawing of a cycle-caterpillar graph over five levels: outer cycle
// split across the top and bottom levels, spine in the middle, caterpillar
// leaves inserted into triangular faces on the second and fourth levels
level_drawing draw_cycle_caterpillar(const two_outer_structure& s);

// 4-SWLP drawing: cycle-caterpillar core plus attachments glued onto outer
// edges (above/below for flat edges, alongside the two closing edges)
level_drawing draw_outerplanar_caterpillar(const plane_graph& g);

} // namespace elr
