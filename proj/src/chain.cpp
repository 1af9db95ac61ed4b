#include <algorithm>

#include "elr/families.hpp"
#include "elr/geometry.hpp"

namespace elr {

// apex 0, b_i = 2i-1, c_i = 2i; triangle i nests strictly inside triangle i+1
lower_bound_chain gen_lower_bound_chain(int k) {
    if (k < 1) fail("PreconditionViolated", "chain index must be positive");
    lower_bound_chain ch;
    ch.k = k;
    ch.apex = 0;
    std::vector<vid> vs = {0};
    for (int i = 1; i <= k; ++i) {
        ch.b.push_back(2 * i - 1);
        ch.c.push_back(2 * i);
        vs.push_back(2 * i - 1);
        vs.push_back(2 * i);
    }
    std::vector<edge> es;
    for (int i = 1; i <= k; ++i) {
        vid b = ch.b[i - 1], c = ch.c[i - 1];
        es.push_back(mk_edge(0, b));
        es.push_back(mk_edge(0, c));
        es.push_back(mk_edge(b, c));
        if (i > 1) {
            es.push_back(mk_edge(ch.b[i - 2], b));
            es.push_back(mk_edge(ch.c[i - 2], c));
            es.push_back(mk_edge(ch.b[i - 2], c));
        }
    }
    std::map<vid, point> coords;
    coords[0] = {rat(0), rat(0)};
    for (int i = 1; i <= k; ++i) {
        coords[ch.b[i - 1]] = {rat(-i) * i, rat(-i)};
        coords[ch.c[i - 1]] = {rat(i) * i, rat(-i)};
    }
    ch.graph = plane_graph_from_coords(vs, es, coords);
    return ch;
}

straight_line_drawing chain_reference_drawing(const lower_bound_chain& ch) {
    straight_line_drawing d;
    d.graph = ch.graph;
    d.coords[ch.apex] = {rat(0), rat(0)};
    for (int i = 1; i <= ch.k; ++i) {
        d.coords[ch.b[i - 1]] = {rat(-i) * i, rat(-i)};
        d.coords[ch.c[i - 1]] = {rat(i) * i, rat(-i)};
    }
    return d;
}

// two chain copies pasted into inner faces of a K4 frame, 4k vertices total
plane_graph gen_lower_bound_glued(int k) {
    if (k < 1) fail("PreconditionViolated", "chain index must be positive");
    lower_bound_chain ch = gen_lower_bound_chain(k);
    straight_line_drawing ref = chain_reference_drawing(ch);

    std::map<vid, point> coords;
    coords[0] = {rat(0), rat(0)};
    coords[1] = {rat(4), rat(0)};
    coords[2] = {rat(2), rat(3)};
    coords[3] = {rat(2), rat(1)};
    std::vector<vid> vs = {0, 1, 2, 3};
    std::set<edge> es = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    point src0 = ref.coords.at(ch.apex);
    point src1 = ref.coords.at(ch.b[ch.k - 1]);
    point src2 = ref.coords.at(ch.c[ch.k - 1]);
    std::vector<std::array<vid, 3>> targets = {{0, 1, 3}, {1, 2, 3}};
    vid next_id = 4;
    for (const auto& t : targets) {
        affine_map m = affine_from_triangles(src0, src1, src2, coords.at(t[0]),
                                             coords.at(t[1]), coords.at(t[2]));
        std::map<vid, vid> remap;
        remap[ch.apex] = t[0];
        remap[ch.b[ch.k - 1]] = t[1];
        remap[ch.c[ch.k - 1]] = t[2];
        for (vid v : ch.graph.vertices)
            if (!remap.count(v)) {
                remap[v] = next_id++;
                vs.push_back(remap.at(v));
                coords[remap.at(v)] = m.apply(ref.coords.at(v));
            }
        for (const auto& e : ch.graph.edges)
            es.insert(mk_edge(remap.at(e.first), remap.at(e.second)));
    }
    return plane_graph_from_coords(vs, {es.begin(), es.end()}, coords);
}

namespace {

bool triangle_neighborhood(const std::map<vid, std::set<vid>>& adj, vid v) {
    const auto& nb = adj.at(v);
    if (nb.size() != 3) return false;
    auto it = nb.begin();
    vid a = *it++, b = *it++, c = *it;
    return adj.at(a).count(b) && adj.at(a).count(c) && adj.at(b).count(c);
}

std::map<vid, std::set<vid>> adjacency(const plane_graph& g) {
    std::map<vid, std::set<vid>> adj;
    for (vid v : g.vertices) adj[v];
    for (const auto& e : g.edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    return adj;
}

void remove_vertex(std::map<vid, std::set<vid>>& adj, vid v) {
    for (vid w : adj.at(v)) adj.at(w).erase(v);
    adj.erase(v);
}

} // namespace

bool is_planar_3tree(const plane_graph& g) {
    if (g.n() < 3) return false;
    auto adj = adjacency(g);
    if (g.n() == 3) {
        for (const auto& [v, nb] : adj)
            if (nb.size() != 2) return false;
        return g.m() == 3;
    }
    // greedily peel simplicial degree-3 vertices; order does not matter
    std::set<vid> candidates;
    for (const auto& [v, nb] : adj) {
        (void)nb;
        candidates.insert(v);
    }
    while (adj.size() > 3) {
        vid pick = -1;
        for (vid v : candidates)
            if (adj.count(v) && triangle_neighborhood(adj, v)) {
                pick = v;
                break;
            }
        if (pick < 0) return false;
        candidates.erase(pick);
        remove_vertex(adj, pick);
    }
    int edges_left = 0;
    for (const auto& [v, nb] : adj) {
        (void)v;
        edges_left += static_cast<int>(nb.size());
    }
    return edges_left == 6;
}

std::vector<vid> peel_order_keeping_outer(const plane_graph& g) {
    std::set<vid> outer(g.outer_face.begin(), g.outer_face.end());
    if (outer.size() != 3 || g.n() < 3) return {};
    auto adj = adjacency(g);
    std::vector<vid> order;
    while (adj.size() > 3) {
        vid pick = -1;
        for (const auto& [v, nb] : adj) {
            (void)nb;
            if (!outer.count(v) && triangle_neighborhood(adj, v)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return {};
        order.push_back(pick);
        remove_vertex(adj, pick);
    }
    for (const auto& [v, nb] : adj) {
        if (!outer.count(v) || nb.size() != 2) return {};
    }
    return order;
}

} // namespace elr
