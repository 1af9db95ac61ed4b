#include <cmath>

#include "elr/geometry.hpp"
#include "elr/metrics.hpp"

namespace elr {

ratio_report ratios(const straight_line_drawing& d) {
    if (d.graph.edges.empty()) fail("PreconditionViolated", "drawing has no edges");
    std::map<edge, rat> len2;
    for (const auto& e : d.graph.edges) {
        rat l2 = dist2(d.coords.at(e.first), d.coords.at(e.second));
        if (sgn(l2) == 0)
            fail("DegenerateEdge", "edge (" + std::to_string(e.first) + "," +
                                       std::to_string(e.second) + ") has zero length");
        len2[e] = l2;
    }

    ratio_report r;
    bool first = true;
    for (const auto& [e, l2] : len2) {
        if (first || l2 > len2.at(r.longest_edge)) r.longest_edge = e;
        if (first || l2 < len2.at(r.shortest_edge)) r.shortest_edge = e;
        first = false;
    }
    r.rho_global_sq = len2.at(r.longest_edge) / len2.at(r.shortest_edge);
    r.rho_global_sq.canonicalize();
    r.witness_global = {r.longest_edge, r.shortest_edge};

    r.rho_local_sq = rat(1);
    r.witness_local = {d.graph.edges.front(), d.graph.edges.front()};
    for (vid v : d.graph.vertices) {
        edge lo{}, hi{};
        bool seen = false;
        for (vid w : d.graph.neighbors(v)) {
            edge e = mk_edge(v, w);
            if (!seen || len2.at(e) > len2.at(hi)) hi = e;
            if (!seen || len2.at(e) < len2.at(lo)) lo = e;
            seen = true;
        }
        if (!seen) continue;
        rat cand = len2.at(hi) / len2.at(lo);
        cand.canonicalize();
        if (cand > r.rho_local_sq) {
            r.rho_local_sq = cand;
            r.witness_local = {hi, lo};
        }
    }
    r.rho_global = std::sqrt(rat_to_double(r.rho_global_sq));
    r.rho_local = std::sqrt(rat_to_double(r.rho_local_sq));
    return r;
}

bool ratio_global_at_most(const ratio_report& r, const rat& bound) {
    return r.rho_global_sq <= bound * bound;
}

} // namespace elr
