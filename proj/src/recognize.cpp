#include <algorithm>

#include "elr/families.hpp"

namespace elr {

halin_structure recognize_halin(const plane_graph& g) {
    validate_graph(g);
    const auto& walk = g.outer_face;
    std::set<vid> on_cycle(walk.begin(), walk.end());
    if (walk.size() < 3 || on_cycle.size() != walk.size())
        fail("NotHalin", "outer face is not a simple cycle");

    std::set<edge> cycle_edges;
    for (std::size_t i = 0; i < walk.size(); ++i)
        cycle_edges.insert(mk_edge(walk[i], walk[(i + 1) % walk.size()]));

    halin_structure h;
    h.graph = g;
    std::map<vid, int> tree_deg;
    for (vid v : g.vertices) tree_deg[v] = 0;
    for (const auto& e : g.edges)
        if (!cycle_edges.count(e)) {
            h.tree_edges.insert(e);
            tree_deg[e.first]++;
            tree_deg[e.second]++;
        }
    if (h.tree_edges.size() != g.n() - 1)
        fail("NotHalin", "non-boundary edges do not form a spanning tree");
    // spanning + correct count: connectivity check via the tree edges alone
    {
        std::map<vid, std::vector<vid>> adj;
        for (const auto& e : h.tree_edges) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        std::set<vid> seen = {g.vertices.front()};
        std::vector<vid> stack = {g.vertices.front()};
        while (!stack.empty()) {
            vid v = stack.back();
            stack.pop_back();
            for (vid w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != g.n())
            fail("NotHalin", "non-boundary edges do not form a spanning tree");
    }
    for (vid v : g.vertices) {
        if (on_cycle.count(v)) {
            if (tree_deg.at(v) != 1) fail("NotHalin", "boundary vertex is not a tree leaf");
        } else {
            if (tree_deg.at(v) < 3)
                fail("NotHalin", "internal tree vertex of degree less than three");
        }
    }

    // adjoint cycle counterclockwise: the stored outer walk runs clockwise
    h.cycle.assign(walk.rbegin(), walk.rend());
    auto mn = std::min_element(h.cycle.begin(), h.cycle.end());
    std::rotate(h.cycle.begin(), mn, h.cycle.end());
    h.trivial = g.n() - h.cycle.size() == 1;
    h.is_k4 = g.n() == 4;
    return h;
}

std::pair<halin_structure, subdivision_record> recognize_generalized_halin(
    const plane_graph& g) {
    validate_graph(g);
    plane_graph core = g;
    std::set<vid> on_outer(core.outer_face.begin(), core.outer_face.end());

    // chains keyed by the current edge, listed from its smaller endpoint
    std::map<edge, std::vector<vid>> chains;
    auto take_chain = [&](vid from, vid to) {
        std::vector<vid> c;
        auto it = chains.find(mk_edge(from, to));
        if (it != chains.end()) {
            c = it->second;
            if (from > to) std::reverse(c.begin(), c.end());
            chains.erase(it);
        }
        return c;
    };

    for (;;) {
        vid pick = -1;
        for (vid v : core.vertices)
            if (!on_outer.count(v) && core.degree(v) == 2) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        vid a = core.neighbors(pick)[0], b = core.neighbors(pick)[1];
        std::vector<vid> merged = take_chain(a, pick);
        merged.push_back(pick);
        auto tail = take_chain(pick, b);
        merged.insert(merged.end(), tail.begin(), tail.end());
        try {
            core = smooth_vertex(core, pick);
        } catch (const elr_error& e) {
            fail("NotGeneralizedHalin", std::string("smoothing failed: ") + e.what());
        }
        if (a > b) std::reverse(merged.begin(), merged.end());
        chains[mk_edge(a, b)] = std::move(merged);
    }

    halin_structure h;
    try {
        h = recognize_halin(core);
    } catch (const elr_error& e) {
        fail("NotGeneralizedHalin", std::string("smoothed core: ") + e.what());
    }
    subdivision_record rec;
    rec.chains = std::move(chains);
    return {h, rec};
}

} // namespace elr
