#include <algorithm>
#include <random>

#include "elr/families.hpp"

namespace elr {

namespace {

// portable shuffle: std::shuffle leaves the permutation implementation-defined
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

// rooted tree grown from K_{1,3}; every internal vertex keeps degree >= 3
struct growth_tree {
    std::map<vid, std::vector<vid>> children; // left to right
    std::map<vid, vid> parent;
    std::vector<vid> internals, leaves; // insertion order
};

growth_tree grow_tree(int n, std::mt19937_64& rng) {
    if (n < 4) fail("PreconditionViolated", "tree needs at least 4 vertices");
    growth_tree t;
    t.children[0] = {1, 2, 3};
    t.parent[1] = t.parent[2] = t.parent[3] = 0;
    t.internals = {0};
    t.leaves = {1, 2, 3};
    int cur = 4;
    while (cur < n) {
        bool expand_leaf = n - cur >= 2 && rng() % 2 == 0;
        if (expand_leaf) {
            std::size_t pick = rng() % t.leaves.size();
            vid u = t.leaves[pick];
            t.leaves.erase(t.leaves.begin() + pick);
            t.children[u] = {cur, cur + 1};
            t.parent[cur] = t.parent[cur + 1] = u;
            t.internals.push_back(u);
            t.leaves.push_back(cur);
            t.leaves.push_back(cur + 1);
            cur += 2;
        } else {
            vid u = t.internals[rng() % t.internals.size()];
            auto& ch = t.children[u];
            ch.insert(ch.begin() + rng() % (ch.size() + 1), cur);
            t.parent[cur] = u;
            t.leaves.push_back(cur);
            ++cur;
        }
    }
    return t;
}

std::vector<vid> dfs_leaf_order(const growth_tree& t) {
    std::vector<vid> order, stack = {0};
    while (!stack.empty()) {
        vid v = stack.back();
        stack.pop_back();
        auto it = t.children.find(v);
        if (it == t.children.end()) {
            order.push_back(v);
        } else {
            for (auto c = it->second.rbegin(); c != it->second.rend(); ++c)
                stack.push_back(*c);
        }
    }
    return order;
}

// find the face using the directed step a->b
int face_with_step(const std::vector<std::vector<vid>>& faces, vid a, vid b) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& w = faces[f];
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == a && w[(i + 1) % w.size()] == b) return int(f);
    }
    return -1;
}

std::vector<vid> rotate_to_step(const std::vector<vid>& w, vid a, vid b) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == a && w[(i + 1) % w.size()] == b) {
            std::vector<vid> out(w.begin() + i + 1, w.end());
            out.insert(out.end(), w.begin(), w.begin() + i + 1);
            return out; // starts at b, ends at a
        }
    fail("PreconditionViolated", "directed step not found in walk");
}

} // namespace

plane_graph gen_random_halin(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    growth_tree t = grow_tree(n, rng);
    std::vector<vid> leaf_order = dfs_leaf_order(t);
    std::size_t k = leaf_order.size();

    plane_graph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back(v);
    for (auto& [p, ch] : t.children)
        for (vid c : ch) g.edges.push_back(mk_edge(p, c));
    std::map<vid, std::size_t> leaf_pos;
    for (std::size_t i = 0; i < k; ++i) leaf_pos[leaf_order[i]] = i;
    for (std::size_t i = 0; i < k; ++i)
        g.edges.push_back(mk_edge(leaf_order[i], leaf_order[(i + 1) % k]));
    std::sort(g.edges.begin(), g.edges.end());

    for (int v = 0; v < n; ++v) {
        auto it = t.children.find(v);
        if (it == t.children.end()) {
            std::size_t i = leaf_pos.at(v);
            g.rotation[v] = {t.parent.at(v), leaf_order[(i + k - 1) % k],
                             leaf_order[(i + 1) % k]};
        } else if (v == 0) {
            g.rotation[v] = it->second;
        } else {
            g.rotation[v] = {t.parent.at(v)};
            g.rotation[v].insert(g.rotation[v].end(), it->second.begin(),
                                 it->second.end());
        }
    }
    g.outer_face.assign(leaf_order.rbegin(), leaf_order.rend());
    validate_graph(g);
    return g;
}

plane_graph gen_random_generalized_halin(int n, std::uint64_t seed, bool force_k4_core) {
    if (n < 4) fail("PreconditionViolated", "need at least 4 vertices");
    std::mt19937_64 rng(seed);
    int core_n = force_k4_core ? 4 : 4 + int(rng() % std::max(1, n - 3));
    plane_graph g = gen_random_halin(core_n, rng());
    halin_structure h = recognize_halin(g);
    std::vector<edge> tree(h.tree_edges.begin(), h.tree_edges.end());
    std::map<edge, int> extra;
    for (int i = core_n; i < n; ++i) extra[tree[rng() % tree.size()]]++;
    for (auto& [e, cnt] : extra) g = subdivide_edge(g, e, cnt);
    return g;
}

plane_graph gen_random_cycle_cycle(int h, int k, std::uint64_t seed) {
    if (h < 3 || k < 3) fail("PreconditionViolated", "both cycles need length >= 3");
    std::mt19937_64 rng(seed);
    std::vector<char> steps(h, 'O');
    steps.insert(steps.end(), k, 'I');
    auto one_cyclic_run = [&](char c) {
        // all occurrences of c cyclically consecutive <=> the others form one block
        int blocks = 0;
        int m = int(steps.size());
        for (int i = 0; i < m; ++i)
            if (steps[i] == c && steps[(i + m - 1) % m] != c) ++blocks;
        return blocks <= 1;
    };
    do {
        shuffle_vec(steps, rng);
    } while (one_cyclic_run('O') || one_cyclic_run('I'));

    auto u = [&](int a) { return (a % h + h) % h; };
    auto v = [&](int b) { return h + (b % k + k) % k; };
    std::vector<std::vector<vid>> faces;
    int a = 0, b = 0;
    for (char s : steps) {
        if (s == 'O') {
            faces.push_back({u(a), u(a + 1), v(b)});
            ++a;
        } else {
            faces.push_back({u(a), v(b + 1), v(b)});
            ++b;
        }
    }
    std::vector<vid> disk;
    for (int j = 0; j < k; ++j) disk.push_back(h + j);
    faces.push_back(disk);
    std::vector<vid> outer;
    for (int i = h - 1; i >= 0; --i) outer.push_back(i);
    faces.push_back(outer);
    return plane_graph_from_faces(faces, int(faces.size()) - 1);
}

namespace {

// split triangles that have a boundary corner and a spine corner by a fresh
// degree-2 leaf joined to both, giving leaves supported by a single boundary
// vertex; re-splitting the created triangle stacks siblings on one spine vertex.
// targets must exclude childless spine ends: hanging a child there changes
// which end of the path counts as the spine and strands the boundary fan on a
// vertex that no longer is one
void add_side_leaves(std::vector<std::vector<vid>>& faces, int count, int h,
                     const std::set<vid>& targets, vid next_id, std::mt19937_64& rng) {
    for (int x = 0; x < count; ++x) {
        std::vector<std::size_t> cand;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (faces[f].size() != 3) continue;
            bool has_o = false, has_p = false;
            for (vid v : faces[f]) {
                if (v < h) has_o = true;
                if (targets.count(v)) has_p = true;
            }
            if (has_o && has_p) cand.push_back(f);
        }
        if (cand.empty()) break;
        std::size_t f = cand[rng() % cand.size()];
        std::vector<vid> w = faces[f];
        std::size_t a = 0, b = 0;
        for (std::size_t q = 0; q < 3; ++q) {
            if (w[q] < h) a = q;
            if (targets.count(w[q])) b = q;
        }
        std::size_t lo = std::min(a, b), hi = std::max(a, b);
        vid l = next_id++;
        std::vector<vid> f1(w.begin() + lo, w.begin() + hi + 1);
        f1.push_back(l);
        std::vector<vid> f2(w.begin() + hi, w.end());
        f2.insert(f2.end(), w.begin(), w.begin() + lo + 1);
        f2.push_back(l);
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(f));
        faces.push_back(std::move(f1));
        faces.push_back(std::move(f2));
    }
}

} // namespace

plane_graph gen_random_cycle_caterpillar(const caterpillar_params& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int s = std::max(1, p.spine_size);
    int L = std::max(0, p.leaf_count);

    // leaves per spine vertex, split into the two sides of the spine
    std::vector<std::vector<int>> bottom(s), top(s);
    for (int x = 0; x < L; ++x) {
        int i = int(rng() % s);
        (rng() % 2 ? top : bottom)[i].push_back(x);
    }

    int tips = L;
    if (s >= 2 && bottom[0].empty() && top[0].empty()) ++tips;
    if (s >= 2 && bottom[s - 1].empty() && top[s - 1].empty()) ++tips;
    int h = std::max(std::max(p.outer_size, tips + 1), 3);

    auto spine_id = [&](int i) { return h + i; };
    auto leaf_id = [&](int x) { return h + s + x; };
    auto u = [&](int a) { return (a % h + h) % h; };

    // closed boundary walk of the caterpillar (counterclockwise)
    std::vector<vid> seq;
    std::set<vid> tip_ids;
    for (int x = 0; x < L; ++x) tip_ids.insert(leaf_id(x));
    if (s >= 2 && bottom[0].empty() && top[0].empty()) tip_ids.insert(spine_id(0));
    if (s >= 2 && bottom[s - 1].empty() && top[s - 1].empty())
        tip_ids.insert(spine_id(s - 1));
    if (s == 1) {
        seq.push_back(spine_id(0));
        for (int x : bottom[0]) {
            seq.push_back(leaf_id(x));
            seq.push_back(spine_id(0));
        }
        for (int x : top[0]) {
            seq.push_back(leaf_id(x));
            seq.push_back(spine_id(0));
        }
        if (seq.size() > 1) seq.pop_back();
    } else {
        for (int i = 0; i < s; ++i) {
            seq.push_back(spine_id(i));
            for (int x : bottom[i]) {
                seq.push_back(leaf_id(x));
                seq.push_back(spine_id(i));
            }
        }
        for (int x : top[s - 1]) {
            seq.push_back(leaf_id(x));
            seq.push_back(spine_id(s - 1));
        }
        for (int i = s - 2; i >= 0; --i) {
            seq.push_back(spine_id(i));
            for (int x : top[i]) {
                seq.push_back(leaf_id(x));
                seq.push_back(spine_id(i));
            }
        }
        seq.pop_back(); // trailing copy of the starting spine vertex
    }

    std::vector<std::vector<vid>> faces;
    std::vector<vid> outer;
    for (int i = h - 1; i >= 0; --i) outer.push_back(i);

    if (seq.size() <= 1) { // single inner vertex: wheel
        for (int a = 0; a < h; ++a) faces.push_back({u(a), u(a + 1), spine_id(0)});
        add_side_leaves(faces, p.side_leaf_count, h, {spine_id(0)}, h + s + L, rng);
        faces.push_back(outer);
        return plane_graph_from_faces(faces, int(faces.size()) - 1);
    }

    int M = int(seq.size());
    // outer steps taken right after each walk position; tip arrivals need >= 1
    std::vector<int> gap(M, 0);
    int budget = h;
    for (int i = 0; i < M; ++i)
        if (tip_ids.count(seq[i])) {
            gap[i] = 1;
            --budget;
        }
    if (budget < 0) fail("PreconditionViolated", "outer cycle too short for the tree");
    // extra boundary steps only at spine arrivals; a fan on a leaf — including
    // a childless end of the spine, which is structurally a leaf — would give
    // that leaf more than two boundary supports
    std::set<vid> safe;
    for (int i = 0; i < s; ++i)
        if (!tip_ids.count(spine_id(i))) safe.insert(spine_id(i));
    if (safe.empty()) safe.insert(spine_id(0));
    std::vector<int> spine_pos;
    for (int i = 0; i < M; ++i)
        if (safe.count(seq[i])) spine_pos.push_back(i);
    while (budget > 0) {
        gap[spine_pos[rng() % spine_pos.size()]]++;
        --budget;
    }

    int a = 0;
    for (int i = 0; i < M; ++i) {
        for (int t = 0; t < gap[i]; ++t) {
            faces.push_back({u(a), u(a + 1), seq[i]});
            ++a;
        }
        faces.push_back({u(a), seq[(i + 1) % M], seq[i]});
    }
    add_side_leaves(faces, p.side_leaf_count, h, safe, h + s + L, rng);
    faces.push_back(outer);
    return plane_graph_from_faces(faces, int(faces.size()) - 1);
}

plane_graph gen_random_outerplanar(int n, std::uint64_t seed) {
    if (n < 3) fail("PreconditionViolated", "need at least 3 vertices");
    std::mt19937_64 rng(seed);
    int pend = n >= 7 ? int(rng() % 3) : 0;
    int m = n - pend;

    // random fan-free triangulation of the polygon 0..m-1
    std::vector<std::vector<vid>> faces;
    std::vector<edge> chords;
    std::vector<std::pair<int, int>> ranges = {{0, m - 1}};
    while (!ranges.empty()) {
        auto [i, j] = ranges.back();
        ranges.pop_back();
        if (j - i < 2) continue;
        int mid = i + 1 + int(rng() % (j - i - 1));
        faces.push_back({i, mid, j});
        if (mid - i >= 2) chords.push_back({i, mid});
        if (j - mid >= 2) chords.push_back({mid, j});
        ranges.push_back({i, mid});
        ranges.push_back({mid, j});
    }
    // delete a random subset of chords, merging the two adjacent faces
    for (const auto& [x, y] : chords) {
        if (rng() % 2) continue;
        int f1 = face_with_step(faces, x, y);
        int f2 = face_with_step(faces, y, x);
        if (f1 < 0 || f2 < 0 || f1 == f2) continue;
        std::vector<vid> w1 = rotate_to_step(faces[f1], x, y); // y .. x
        std::vector<vid> w2 = rotate_to_step(faces[f2], y, x); // x .. y
        w1.insert(w1.end(), w2.begin() + 1, w2.end() - 1);
        faces[f1] = w1;
        faces.erase(faces.begin() + f2);
    }

    // pendant paths hang outside the polygon
    std::map<vid, std::vector<vid>> pendant_children;
    vid prev = -1;
    for (int x = 0; x < pend; ++x) {
        vid id = m + x;
        vid host = (prev >= 0 && rng() % 2) ? prev : vid(rng() % m);
        pendant_children[host].push_back(id);
        prev = id;
    }
    std::vector<vid> outer;
    auto emit = [&](auto&& self, vid v) -> void {
        outer.push_back(v);
        auto it = pendant_children.find(v);
        if (it == pendant_children.end()) return;
        for (vid c : it->second) {
            self(self, c);
            outer.push_back(v);
        }
    };
    for (int i = m - 1; i >= 0; --i) emit(emit, i);
    faces.push_back(outer);
    return plane_graph_from_faces(faces, int(faces.size()) - 1);
}

plane_graph gen_random_outerplanar_attachment(const plane_graph& core,
                                              const attachment_params& p,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    face_set fs = extract_faces(core);
    std::vector<std::vector<vid>> faces;
    for (int f = 0; f < int(fs.faces.size()); ++f)
        if (f != fs.outer_index) faces.push_back(fs.faces[f]);
    std::vector<vid> outer = core.outer_face;

    int want = std::min<int>(p.attachment_count, int(outer.size()));
    std::vector<int> slots(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) slots[i] = int(i);
    shuffle_vec(slots, rng);
    std::vector<edge> seams;
    for (int i = 0; i < want; ++i)
        seams.push_back({outer[slots[i]], outer[(slots[i] + 1) % outer.size()]});

    vid next_id = core.vertices.back() + 1;
    for (const auto& [ua, ub] : seams) { // outer walk step ua -> ub (clockwise)
        int pn = 3 + int(rng() % std::max(1, p.max_pocket_size - 2));
        plane_graph pocket = gen_random_outerplanar(pn, rng());
        // pocket polygon edge (0,1) becomes the seam; the pocket's inner face
        // at that edge uses the step 0 -> 1, which must take over the walk step
        // ua -> ub being replaced, so 0 maps to ua and 1 maps to ub
        std::map<vid, vid> remap = {{0, ua}, {1, ub}};
        for (vid v : pocket.vertices)
            if (!remap.count(v)) remap[v] = next_id++;
        face_set ps = extract_faces(pocket);
        for (int f = 0; f < int(ps.faces.size()); ++f) {
            if (f == ps.outer_index) continue;
            std::vector<vid> w;
            for (vid v : ps.faces[f]) w.push_back(remap.at(v));
            faces.push_back(w);
        }
        // splice the pocket boundary into the outer walk in place of ua -> ub
        std::vector<vid> pw = rotate_to_step(ps.faces[ps.outer_index], 1, 0);
        // pw runs 0 .. 1, i.e. ub .. ua after remapping
        std::vector<vid> detour;
        for (std::size_t i = 1; i + 1 < pw.size(); ++i) detour.push_back(remap.at(pw[i]));
        std::vector<vid> nw;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            nw.push_back(outer[i]);
            if (outer[i] == ua && outer[(i + 1) % outer.size()] == ub)
                nw.insert(nw.end(), detour.begin(), detour.end());
        }
        outer = nw;
    }
    faces.push_back(outer);
    return plane_graph_from_faces(faces, int(faces.size()) - 1);
}

free_tree gen_random_characteristic_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    growth_tree t = grow_tree(n, rng);
    free_tree ft;
    for (int v = 0; v < n; ++v) ft.vertices.push_back(v);
    for (int v = 0; v < n; ++v) {
        std::vector<vid> adj;
        if (v != 0) adj.push_back(t.parent.at(v));
        auto it = t.children.find(v);
        if (it != t.children.end())
            adj.insert(adj.end(), it->second.begin(), it->second.end());
        ft.adj[v] = adj;
    }
    return ft;
}

} // namespace elr
