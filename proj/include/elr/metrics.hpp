#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elr/families.hpp"
#include "elr/leveling.hpp"

namespace elr {

struct ratio_report {
    rat rho_local_sq;  // exact square of the local ratio
    rat rho_global_sq; // exact square of the global ratio
    double rho_local = 0.0;
    double rho_global = 0.0;
    std::pair<edge, edge> witness_local;  // adjacent pair achieving rho_local
    std::pair<edge, edge> witness_global; // longest, shortest
    edge longest_edge, shortest_edge;
};

ratio_report ratios(const straight_line_drawing& d);

// exact comparison of a ratio report against a decimal bound like "3.01"
bool ratio_global_at_most(const ratio_report& r, const rat& bound);

struct violation {
    edge e1, e2;
    std::string kind; // crossing | overlap | endpoint-through-vertex
};

struct planarity_verdict {
    bool planar = true;
    std::vector<violation> violations; // sorted canonically

    explicit operator bool() const { return planar; }
};

// exact all-pairs segment audit; the two variants return identical verdicts
planarity_verdict check_planar_straight_line(const straight_line_drawing& d);
planarity_verdict check_planar_straight_line_serial(const straight_line_drawing& d);

struct perimeter_verdict {
    bool ok = true;
    int first_failing_index = -1;
    std::string detail;

    explicit operator bool() const { return ok; }
};

// verifies, with exact interval arithmetic over square roots, that triangle
// perimeters grow by more than 3/10 of the shortest triangle edge per step,
// and that p(triangle_i) > (3/10) * i * shortest for every i
perimeter_verdict check_perimeter_growth(const straight_line_drawing& d,
                                         const lower_bound_chain& ch);

// are all internal faces positively oriented and the outer face negatively?
bool embedding_preserved(const straight_line_drawing& d);

struct optimize_options {
    // called on every exactly-verified feasible snapshot (initial drawing,
    // accepted improvements, periodic iterates, finals)
    std::function<void(const straight_line_drawing&)> on_feasible_snapshot;
    int snapshot_every = 1000; // iterations between periodic exact snapshots
    double barrier_weight = 1e-3;
    double initial_temperature = 0.15;
};

struct optimize_result {
    straight_line_drawing best;
    rat best_rho_local_sq;
    double best_rho_local = 0.0;
    int best_restart = -1;
    std::vector<double> restart_best; // best rho_local per restart
};

// multi-restart annealed coordinate search over vertex coordinates, keeping
// every internal triangular face positively oriented and the outer face fixed;
// restarts run in parallel, the reduction is deterministic
optimize_result optimize_local_ratio(const plane_graph& g, int restarts, int iterations,
                                     std::uint64_t seed, const optimize_options& opt = {});

} // namespace elr
