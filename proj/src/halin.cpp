#include <algorithm>
#include <set>

#include "elr/halin.hpp"

namespace elr {

bool rooted_tree::is_leaf(vid v) const {
    auto it = children.find(v);
    return it == children.end() || it->second.empty();
}

std::vector<vid> rooted_tree::leaves_in_order() const {
    std::vector<vid> out, stack = {root};
    while (!stack.empty()) {
        vid v = stack.back();
        stack.pop_back();
        if (is_leaf(v)) {
            out.push_back(v);
            continue;
        }
        const auto& ch = children.at(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<vid> rooted_tree::vertices() const {
    std::vector<vid> out = {root};
    for (const auto& [v, p] : parent) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using cyclic_adj = std::map<vid, std::vector<vid>>;

cyclic_adj tree_adjacency(const plane_graph& g, const std::set<edge>& tree_edges) {
    cyclic_adj adj;
    for (vid v : g.vertices) {
        std::vector<vid> a;
        for (vid w : g.neighbors(v))
            if (tree_edges.count(mk_edge(v, w))) a.push_back(w);
        adj[v] = a;
    }
    return adj;
}

// root so that the children of `root` start at `first` and every other child
// list starts right after the parent slot (rotations run counterclockwise, so
// this is the left-to-right order)
rooted_tree root_at(const cyclic_adj& adj, vid root, vid first) {
    rooted_tree t;
    t.root = root;
    std::vector<vid> stack = {root};
    while (!stack.empty()) {
        vid v = stack.back();
        stack.pop_back();
        const auto& a = adj.at(v);
        std::vector<vid> ch;
        if (v == root) {
            auto it = std::find(a.begin(), a.end(), first);
            if (it == a.end())
                fail("PreconditionViolated", "designated first child is not adjacent to the root");
            ch.insert(ch.end(), it, a.end());
            ch.insert(ch.end(), a.begin(), it);
        } else {
            vid p = t.parent.at(v);
            auto it = std::find(a.begin(), a.end(), p);
            ch.insert(ch.end(), it + 1, a.end());
            ch.insert(ch.end(), a.begin(), it);
        }
        for (vid c : ch) {
            t.parent[c] = v;
            stack.push_back(c);
        }
        if (!ch.empty()) t.children[v] = ch;
    }
    return t;
}

// root at the parent of vl so that vl is the leftmost leaf; vr must come out
// rightmost, which pins the whole left-to-right order
rooted_tree root_by_pair(const cyclic_adj& adj, vid vl, vid vr) {
    if (adj.at(vl).size() != 1)
        fail("PreconditionViolated", "left extreme is not a leaf");
    rooted_tree t = root_at(adj, adj.at(vl)[0], vl);
    auto lv = t.leaves_in_order();
    if (lv.front() != vl || lv.back() != vr)
        fail("PreconditionViolated", "rooting did not produce the requested extreme leaves");
    return t;
}

// parent -> leaf children for every tuft parent: >= 2 leaf neighbors and at
// most one internal neighbor
std::map<vid, std::vector<vid>> tuft_parents(const cyclic_adj& adj) {
    std::map<vid, std::vector<vid>> out;
    for (const auto& [u, nb] : adj) {
        if (nb.size() < 2) continue;
        std::vector<vid> leaf_ch;
        int internal_nb = 0;
        for (vid w : nb) {
            if (adj.at(w).size() == 1)
                leaf_ch.push_back(w);
            else
                ++internal_nb;
        }
        if (leaf_ch.size() >= 2 && internal_nb <= 1) out[u] = leaf_ch;
    }
    return out;
}

// insert a chain of previously smoothed vertices back along edge (x, y);
// span-0 edges take the chain in place, span-1 edges put the whole chain on
// the lower endpoint's level immediately left of it
void reinsert_chain(level_drawing& d, vid x, vid y, std::vector<vid> chain) {
    if (chain.empty()) return;
    int lx = d.level.at(x), ly = d.level.at(y);
    if (lx == ly) {
        auto& row = d.order[lx];
        int px = d.pos(x), py = d.pos(y);
        if (px > py) {
            std::swap(px, py);
            std::reverse(chain.begin(), chain.end());
        }
        if (py != px + 1)
            fail("PreconditionViolated", "chain endpoints are not order-consecutive");
        row.insert(row.begin() + px + 1, chain.begin(), chain.end());
        for (vid v : chain) d.level[v] = lx;
    } else {
        vid lower = lx > ly ? x : y;
        int lev = std::max(lx, ly);
        if (lower == x) std::reverse(chain.begin(), chain.end());
        auto& row = d.order[lev];
        int p = d.pos(lower);
        row.insert(row.begin() + p, chain.begin(), chain.end());
        for (vid v : chain) d.level[v] = lev;
    }
}

plane_graph remove_inner_edge(const plane_graph& g, vid u, vid v) {
    plane_graph out = g;
    edge e = mk_edge(u, v);
    out.edges.erase(std::remove(out.edges.begin(), out.edges.end(), e), out.edges.end());
    auto& ru = out.rotation.at(u);
    ru.erase(std::remove(ru.begin(), ru.end(), v), ru.end());
    auto& rv = out.rotation.at(v);
    rv.erase(std::remove(rv.begin(), rv.end(), u), rv.end());
    return out;
}

void set_rows(level_drawing& d, const std::map<int, std::vector<vid>>& rows) {
    d.order = rows;
    for (const auto& [lev, row] : rows)
        for (vid v : row) d.level[v] = lev;
}

level_drawing draw_wheel(const halin_structure& h, const cyclic_adj& adj) {
    vid hub = -1;
    for (vid v : h.graph.vertices)
        if (adj.at(v).size() > 1) hub = v;
    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    std::map<int, std::vector<vid>> rows;
    rows[0] = {cyc[0]};
    rows[1] = {cyc[1], hub, cyc[m - 1]};
    for (int i = 2; i <= m - 2; ++i) rows[2].push_back(cyc[i]);
    level_drawing d;
    set_rows(d, rows);
    d.graph = h.graph;
    return d;
}

level_drawing draw_double_star(const halin_structure& h, const cyclic_adj& adj) {
    std::vector<vid> internals;
    for (const auto& [v, nb] : adj)
        if (nb.size() > 1) internals.push_back(v);
    vid a = internals[0], b = internals[1];
    auto par = [&](vid leaf) { return adj.at(leaf)[0]; };

    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    int start = -1;
    for (int i = 0; i < m; ++i)
        if (par(cyc[i]) == a && par(cyc[(i + m - 1) % m]) == b) start = i;
    if (start < 0) fail("PreconditionViolated", "leaf blocks are not contiguous");
    std::vector<vid> al, bl;
    for (int i = 0; i < m; ++i) {
        vid v = cyc[(start + i) % m];
        (par(v) == a ? al : bl).push_back(v);
    }
    int p = static_cast<int>(al.size()), q = static_cast<int>(bl.size());

    std::map<int, std::vector<vid>> rows;
    for (int i = p - 2; i >= 0; --i) rows[0].push_back(al[i]);
    rows[1] = {al[p - 1], a, b, bl[q - 1]};
    for (int i = 0; i <= q - 2; ++i) rows[2].push_back(bl[i]);
    level_drawing d;
    set_rows(d, rows);
    d.graph = h.graph;
    return d;
}

level_drawing draw_wide_ring(const halin_structure& h, const cyclic_adj& adj, vid c) {
    auto par = [&](vid leaf) { return adj.at(leaf)[0]; };
    // arms in rotation order around the center, smallest id first
    std::vector<vid> s = adj.at(c);
    auto mn = std::min_element(s.begin(), s.end());
    std::rotate(s.begin(), mn, s.end());
    int na = static_cast<int>(s.size());

    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    int start = -1;
    for (int i = 0; i < m; ++i)
        if (par(cyc[i]) == s[0] && par(cyc[(i + m - 1) % m]) != s[0]) start = i;
    if (start < 0) fail("PreconditionViolated", "leaf blocks are not contiguous");
    std::vector<std::vector<vid>> t(na);
    int arm = -1;
    vid prev_parent = -1;
    for (int i = 0; i < m; ++i) {
        vid v = cyc[(start + i) % m];
        if (par(v) != prev_parent) {
            ++arm;
            prev_parent = par(v);
            if (arm >= na || par(v) != s[arm])
                fail("PreconditionViolated", "leaf blocks do not follow the arm rotation");
        }
        t[arm].push_back(v);
    }
    auto k = [&](int i) { return static_cast<int>(t[i].size()); };

    std::map<int, std::vector<vid>> rows;
    for (int j = 0; j + 1 < k(0); ++j) rows[-1].push_back(t[0][j]);
    for (int j = 1; j < k(na - 1); ++j) rows[0].push_back(t[na - 1][j]);
    rows[0].push_back(s[0]);
    rows[0].push_back(t[0][k(0) - 1]);
    rows[1] = {t[na - 1][0], s[na - 1], c, s[1], t[1][0]};
    if (na >= 4) rows[2].push_back(t[na - 2][k(na - 2) - 1]);
    for (int i = na - 2; i >= 2; --i) rows[2].push_back(s[i]);
    for (int j = k(1) - 1; j >= 1; --j) rows[2].push_back(t[1][j]);
    if (na >= 4) {
        for (int j = k(na - 2) - 2; j >= 0; --j) rows[3].push_back(t[na - 2][j]);
        for (int i = na - 3; i >= 2; --i)
            for (int j = k(i) - 1; j >= 0; --j) rows[3].push_back(t[i][j]);
    }
    level_drawing d;
    set_rows(d, rows);
    d.graph = h.graph;
    normalize_levels(d);
    return d;
}

level_drawing draw_single_leaf_case(const halin_structure& h, const cyclic_adj& adj,
                                    const std::map<vid, std::vector<vid>>& tufts) {
    auto par = [&](vid leaf) { return adj.at(leaf)[0]; };
    std::set<vid> in_tuft;
    for (const auto& [p, ls] : tufts) in_tuft.insert(ls.begin(), ls.end());
    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    auto single = [&](int i) {
        return adj.at(cyc[i]).size() == 1 && !in_tuft.count(cyc[i]);
    };

    // maximal cyclic runs of single leaves; the chosen run is the one whose
    // clockwise predecessor tuft has the smallest member id
    int best_i = -1, best_j = -1;
    vid best_key = -1;
    for (int i = 0; i < m; ++i) {
        if (!single(i) || single((i + m - 1) % m)) continue;
        int j = i;
        while (single((j + 1) % m)) j = (j + 1) % m;
        vid succ = cyc[(j + 1) % m];
        const auto& tuft = tufts.at(par(succ));
        vid key = *std::min_element(tuft.begin(), tuft.end());
        if (best_i < 0 || key < best_key) {
            best_i = i;
            best_j = j;
            best_key = key;
        }
    }
    if (best_i < 0) fail("PreconditionViolated", "no single-leaf run found");

    std::vector<vid> run;
    for (int i = best_i;; i = (i + 1) % m) {
        run.push_back(cyc[i]);
        if (i == best_j) break;
    }
    vid vl = cyc[(best_j + 1) % m], vr = cyc[(best_i + m - 1) % m];

    plane_graph g2 = h.graph;
    std::set<vid> v2;
    for (vid leaf : run) {
        v2.insert(par(leaf));
        g2 = remove_inner_edge(g2, leaf, par(leaf));
    }
    for (vid leaf : run) g2 = smooth_vertex(g2, leaf);

    // parents left with degree 2 get smoothed and remembered as chains
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
        for (vid v : v2)
            if (g2.has_vertex(v) && g2.degree(v) == 2) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        vid a = g2.neighbors(pick)[0], b = g2.neighbors(pick)[1];
        std::vector<vid> merged = take_chain(a, pick);
        merged.push_back(pick);
        auto tail = take_chain(pick, b);
        merged.insert(merged.end(), tail.begin(), tail.end());
        g2 = smooth_vertex(g2, pick);
        if (a > b) std::reverse(merged.begin(), merged.end());
        chains[mk_edge(a, b)] = std::move(merged);
        v2.erase(pick);
    }

    halin_structure h2 = recognize_halin(g2);
    cyclic_adj adj2 = tree_adjacency(h2.graph, h2.tree_edges);
    rooted_tree rt = root_by_pair(adj2, vl, vr);
    level_drawing d = layout_characteristic(rt);

    for (const auto& [e, chain] : chains) reinsert_chain(d, e.first, e.second, chain);

    // the extracted run returns on a fresh level above, clockwise from vl
    std::vector<vid>& top = d.order[-1];
    for (auto it = run.rbegin(); it != run.rend(); ++it) top.push_back(*it);
    for (vid v : run) d.level[v] = -1;

    d.graph = h.graph;
    normalize_levels(d);
    return d;
}

level_drawing draw_split_case(const halin_structure& h, const cyclic_adj& adj,
                              const std::set<vid>& core_internal) {
    edge estar{-1, -1};
    for (const auto& e : h.tree_edges)
        if (core_internal.count(e.first) && core_internal.count(e.second)) {
            estar = e;
            break;
        }
    if (estar.first < 0) fail("PreconditionViolated", "no inner tree edge to split at");
    vid ra = estar.first, rb = estar.second;

    std::set<edge> cyc_edges;
    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    for (int i = 0; i < m; ++i) cyc_edges.insert(mk_edge(cyc[i], cyc[(i + 1) % m]));

    // one side of the split: preliminary rooting at r with first child right
    // after the removed neighbor, then the definitive rooting by extreme pair
    struct side {
        level_drawing d;
        vid vl, vr, r;
    };
    auto build_side = [&](vid r, vid other) {
        std::set<vid> comp = {r};
        std::vector<vid> stack = {r};
        while (!stack.empty()) {
            vid v = stack.back();
            stack.pop_back();
            for (vid w : adj.at(v)) {
                if (v == r && w == other) continue;
                if (comp.insert(w).second) stack.push_back(w);
            }
        }
        cyclic_adj sub;
        for (vid v : comp) {
            std::vector<vid> a;
            for (vid w : adj.at(v))
                if (!(v == r && w == other)) a.push_back(w);
            sub[v] = a;
        }
        const auto& full = adj.at(r);
        auto it = std::find(full.begin(), full.end(), other);
        vid first = full[(std::distance(full.begin(), it) + 1) % full.size()];
        rooted_tree prelim = root_at(sub, r, first);
        auto lv = prelim.leaves_in_order();
        side s;
        s.vl = lv.front();
        s.vr = lv.back();
        s.r = r;
        std::vector<vid> chain;
        if (sub.at(r).size() == 2) {
            vid x = sub.at(r)[0], y = sub.at(r)[1];
            std::replace(sub[x].begin(), sub[x].end(), r, y);
            std::replace(sub[y].begin(), sub[y].end(), r, x);
            sub.erase(r);
            chain = {r};
            s.d = layout_characteristic(root_by_pair(sub, s.vl, s.vr));
            reinsert_chain(s.d, x, y, chain);
        } else {
            s.d = layout_characteristic(root_by_pair(sub, s.vl, s.vr));
        }
        return s;
    };
    side sa = build_side(ra, rb), sb = build_side(rb, ra);

    if (!cyc_edges.count(mk_edge(sa.vl, sb.vr)) || !cyc_edges.count(mk_edge(sa.vr, sb.vl)))
        fail("PreconditionViolated", "split sides do not meet along boundary edges");

    level_drawing top = mirror(sb.d, true, true);
    std::vector<edge> seams = {mk_edge(sa.vl, sb.vr), mk_edge(ra, rb),
                               mk_edge(sa.vr, sb.vl)};
    level_drawing d = stack(top, sa.d, seams, 0);
    d.graph = h.graph;
    normalize_levels(d);
    return d;
}

} // namespace

rooted_tree root_characteristic_tree(const halin_structure& h) {
    cyclic_adj adj = tree_adjacency(h.graph, h.tree_edges);
    const auto& cyc = h.cycle;
    int m = static_cast<int>(cyc.size());
    vid bl = -1, br = -1;
    for (int i = 0; i < m; ++i) {
        vid vl = cyc[(i + 1) % m], vr = cyc[i]; // clockwise-consecutive pair
        if (adj.at(vl)[0] == adj.at(vr)[0]) continue;
        if (bl < 0 || std::pair{vl, vr} < std::pair{bl, br}) {
            bl = vl;
            br = vr;
        }
    }
    if (bl < 0)
        fail("PreconditionViolated",
             "all boundary pairs are siblings; the tree is a star");
    return root_by_pair(adj, bl, br);
}

rooted_tree root_tree(const free_tree& t, vid root, vid leftmost_leaf) {
    if (!t.adj.count(root) || !t.adj.count(leftmost_leaf) || root == leftmost_leaf)
        fail("PreconditionViolated", "bad root or leaf");
    // first child of the root = first step on the path toward the leaf
    std::map<vid, vid> par;
    std::vector<vid> stack = {root};
    par[root] = root;
    while (!stack.empty()) {
        vid v = stack.back();
        stack.pop_back();
        for (vid w : t.adj.at(v))
            if (!par.count(w)) {
                par[w] = v;
                stack.push_back(w);
            }
    }
    vid first = leftmost_leaf;
    while (par.at(first) != root) first = par.at(first);
    return root_at(t.adj, root, first);
}

characteristic_decomposition decompose(const rooted_tree& t) {
    characteristic_decomposition dec;
    std::vector<vid> queue = {t.root};
    std::size_t head = 0;
    while (head < queue.size()) {
        vid w = queue[head++];
        std::vector<vid> path;
        if (t.is_leaf(w)) {
            path = {w};
        } else {
            vid x = w;
            while (!t.is_leaf(x)) x = t.children.at(x).front();
            vid pl = t.parent.at(x);
            x = w;
            while (!t.is_leaf(x)) x = t.children.at(x).back();
            vid pr = t.parent.at(x);
            for (vid y = pl; y != w; y = t.parent.at(y)) path.push_back(y);
            path.push_back(w);
            std::vector<vid> down;
            for (vid y = pr; y != w; y = t.parent.at(y)) down.push_back(y);
            path.insert(path.end(), down.rbegin(), down.rend());
        }
        int id = static_cast<int>(dec.paths.size());
        dec.paths.push_back(path);
        std::set<vid> on_path(path.begin(), path.end());
        for (vid v : path) {
            dec.path_of[v] = id;
            if (t.is_leaf(v)) continue;
            for (vid c : t.children.at(v))
                if (!on_path.count(c)) queue.push_back(c);
        }
    }

    // tufts, left to right
    std::map<vid, std::size_t> leaf_index;
    auto lv = t.leaves_in_order();
    for (std::size_t i = 0; i < lv.size(); ++i) leaf_index[lv[i]] = i;
    std::vector<std::vector<vid>> tufts;
    for (vid u : t.vertices()) {
        if (t.is_leaf(u)) continue;
        dec.pruned_vertices.insert(u);
        std::vector<vid> leaf_ch;
        int internal_ch = 0;
        for (vid c : t.children.at(u)) {
            if (t.is_leaf(c))
                leaf_ch.push_back(c);
            else
                ++internal_ch;
        }
        int internal_nb = internal_ch + (u == t.root ? 0 : 1);
        if (leaf_ch.size() >= 2 && internal_nb <= 1) tufts.push_back(leaf_ch);
    }
    std::sort(tufts.begin(), tufts.end(),
              [&](const std::vector<vid>& a, const std::vector<vid>& b) {
                  return leaf_index.at(a.front()) < leaf_index.at(b.front());
              });
    dec.tufts = std::move(tufts);
    return dec;
}

std::vector<std::set<vid>> brute_force_tufts(const free_tree& t) {
    std::vector<std::set<vid>> out;
    for (vid u : t.vertices) {
        const auto& nb = t.adj.at(u);
        if (nb.size() < 2) continue;
        std::set<vid> leaf_nb;
        int internal_nb = 0;
        for (vid w : nb) {
            if (t.adj.at(w).size() == 1)
                leaf_nb.insert(w);
            else
                ++internal_nb;
        }
        if (leaf_nb.size() >= 2 && internal_nb <= 1) out.push_back(leaf_nb);
    }
    return out;
}

int pruned_leaf_count(const free_tree& t) {
    int count = 0;
    for (vid u : t.vertices) {
        if (t.adj.at(u).size() < 2) continue;
        int internal_nb = 0;
        for (vid w : t.adj.at(u))
            if (t.adj.at(w).size() >= 2) ++internal_nb;
        if (internal_nb <= 1) ++count;
    }
    return count;
}

aux_tree build_aux(const rooted_tree& t, const characteristic_decomposition& dec) {
    aux_tree a;
    a.root = dec.path_of.at(t.root);
    for (std::size_t mu = 0; mu < dec.paths.size(); ++mu) {
        std::vector<int> ch;
        for (vid u : dec.paths[mu]) {
            if (t.is_leaf(u)) continue;
            for (vid c : t.children.at(u)) {
                int nu = dec.path_of.at(c);
                if (nu != static_cast<int>(mu)) ch.push_back(nu);
            }
        }
        a.children[static_cast<int>(mu)] = ch;
    }
    a.depth[a.root] = 0;
    std::vector<int> stack = {a.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : a.children.at(v)) {
            a.depth[c] = a.depth.at(v) + 1;
            stack.push_back(c);
        }
    }
    return a;
}

level_drawing layout_characteristic(const rooted_tree& t) {
    characteristic_decomposition dec = decompose(t);
    aux_tree aux = build_aux(t, dec);

    auto lv = t.leaves_in_order();
    vid vl = lv.front(), vr = lv.back();
    auto in_tuft = [&](vid v) {
        for (const auto& tuft : dec.tufts)
            if (std::find(tuft.begin(), tuft.end(), v) != tuft.end()) return true;
        return false;
    };
    if (!in_tuft(vl) || !in_tuft(vr))
        fail("PreconditionViolated", "extreme leaves must belong to tufts");

    // depth-first order of the auxiliary tree gives the within-level order
    level_drawing d;
    std::vector<int> stack = {aux.root};
    while (!stack.empty()) {
        int mu = stack.back();
        stack.pop_back();
        int lev = aux.depth.at(mu);
        for (vid v : dec.paths[mu]) {
            d.order[lev].push_back(v);
            d.level[v] = lev;
        }
        const auto& ch = aux.children.at(mu);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }

    // promote the extreme leaves to the ends of the top level
    auto promote = [&](vid v, bool front) {
        auto& row = d.order[d.level.at(v)];
        row.erase(std::find(row.begin(), row.end(), v));
        if (front)
            d.order[0].insert(d.order[0].begin(), v);
        else
            d.order[0].push_back(v);
        d.level[v] = 0;
    };
    promote(vl, true);
    promote(vr, false);

    // bare tree graph; rotations stay empty, downstream checks use edges only
    plane_graph g;
    g.vertices = t.vertices();
    for (const auto& [v, p] : t.parent) g.edges.push_back(mk_edge(v, p));
    std::sort(g.edges.begin(), g.edges.end());
    d.graph = g;
    return d;
}

level_drawing draw_halin(const halin_structure& h) {
    if (h.is_k4)
        fail("IsK4", "K4 has no such drawing; use the generalized algorithm");
    cyclic_adj adj = tree_adjacency(h.graph, h.tree_edges);
    if (h.trivial) return draw_wheel(h, adj);

    auto tufts = tuft_parents(adj);
    std::set<vid> in_tuft;
    for (const auto& [p, ls] : tufts) in_tuft.insert(ls.begin(), ls.end());
    bool any_single = false;
    for (vid v : h.cycle)
        if (!in_tuft.count(v)) any_single = true;
    if (any_single) return draw_single_leaf_case(h, adj, tufts);

    std::vector<vid> internals;
    for (const auto& [v, nb] : adj)
        if (nb.size() > 1) internals.push_back(v);
    if (internals.size() == 2) return draw_double_star(h, adj);

    std::set<vid> core_internal; // internal vertices of the leafless tree
    for (vid v : internals) {
        int internal_nb = 0;
        for (vid w : adj.at(v))
            if (adj.at(w).size() > 1) ++internal_nb;
        if (internal_nb >= 2) core_internal.insert(v);
    }
    if (core_internal.size() == 1) return draw_wide_ring(h, adj, *core_internal.begin());
    return draw_split_case(h, adj, core_internal);
}

} // namespace elr
