#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elr/plane_graph.hpp"

namespace elr {

// leveled drawing: level per vertex (smaller = higher), left-to-right order per
// level, and for every edge of span >= 2 a crossing position on each strictly
// crossed level (position p means: between order[p-1] and order[p], with p = 0
// left of everything and p = size right of everything)
struct level_drawing {
    plane_graph graph;
    std::map<vid, int> level;
    std::map<int, std::vector<vid>> order;
    std::map<edge, std::map<int, int>> gaps;

    int pos(vid v) const; // index of v inside its level's order
};

struct straight_line_drawing {
    plane_graph graph;
    std::map<vid, point> coords;
};

int edge_span(const level_drawing& d, const edge& e);
int max_span(const level_drawing& d);

// per-span edge counts
std::map<int, int> audit_span(const level_drawing& d);

struct swlp_verdict {
    bool ok = true;
    std::vector<std::string> failures; // human-readable witnesses

    explicit operator bool() const { return ok; }
};

// full validity check for a k-SWLP drawing: structural consistency, spans <= k,
// span-0 edges order-consecutive, complete gap records, and a successful
// straight-line realization that passes the exact planarity checker
swlp_verdict validate_swlp(const level_drawing& d, int k);

// structural part of validate_swlp only (no realization); used internally
swlp_verdict check_drawing_structure(const level_drawing& d);

// split every level i into levels 2i and 2i+1, sending each vertex up or down
// by the parity of its position; removes all span-0 edges, at most doubles+1
// every span
level_drawing double_levels(const level_drawing& d);

// y = -level (unit level spacing), x solved exactly so that per-level order and
// all recorded gap crossings hold, then squeezed to total width epsilon
straight_line_drawing realize_straight_line(const level_drawing& d, const rat& epsilon);

level_drawing mirror(const level_drawing& d, bool horizontal, bool vertical);

// shift all levels strictly below `after_level` down by `count`, leaving empty
// levels; gap records of edges now crossing them are extended
level_drawing insert_empty_levels(const level_drawing& d, int after_level, int count);

// place `top` above `bottom` (vertex sets disjoint) so that the bottom row of
// `top` sits `gap_levels + 1` levels above the top row of `bottom`, and add the
// seam edges; seam endpoints must live on those two boundary rows
level_drawing stack(const level_drawing& top, const level_drawing& bottom,
                    const std::vector<edge>& seam_edges, int gap_levels = 0);

enum class anchor_mode {
    edge_on_top,  // level 0 holds exactly the two anchor endpoints
    edge_leftmost // anchor endpoints are alone on level 0 / leftmost on level 1
};

// breadth-first layering of an outerplanar embedded graph into a 1-SWLP drawing
level_drawing outerplanar_1swlp(const plane_graph& g, anchor_mode mode, edge anchor);

// renumber levels so the smallest becomes 0 (serialization form)
void normalize_levels(level_drawing& d);

} // namespace elr
