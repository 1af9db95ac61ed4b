#include "elr/plane_graph.hpp"

#include <algorithm>
#include <queue>

namespace elr {

bool plane_graph::has_vertex(vid v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool plane_graph::has_edge(vid u, vid v) const {
    return std::binary_search(edges.begin(), edges.end(), mk_edge(u, v));
}

int plane_graph::degree(vid v) const {
    auto it = rotation.find(v);
    return it == rotation.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<vid>& plane_graph::neighbors(vid v) const {
    auto it = rotation.find(v);
    if (it == rotation.end()) fail("UnknownVertex", "vertex " + std::to_string(v));
    return it->second;
}

bool same_cyclic_sequence(const std::vector<vid>& a, const std::vector<vid>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
        if (ok) return true;
    }
    return false;
}

namespace {

// next directed edge of the face lying to the left of (u, v)
std::pair<vid, vid> face_next(const plane_graph& g, vid u, vid v) {
    const auto& rot = g.neighbors(v);
    auto it = std::find(rot.begin(), rot.end(), u);
    if (it == rot.end())
        fail("InconsistentRotation", "edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") not closed at " +
                                         std::to_string(v));
    std::size_t i = static_cast<std::size_t>(it - rot.begin());
    vid w = rot[(i + rot.size() - 1) % rot.size()];
    return {v, w};
}

} // namespace

face_set extract_faces(const plane_graph& g) {
    std::map<std::pair<vid, vid>, bool> used;
    for (const auto& [v, rot] : g.rotation)
        for (vid w : rot) used[{v, w}] = false;

    face_set fs;
    for (auto& [start, seen] : used) {
        if (seen) continue;
        std::vector<vid> walk;
        std::pair<vid, vid> cur = start;
        do {
            used[cur] = true;
            walk.push_back(cur.first);
            cur = face_next(g, cur.first, cur.second);
        } while (cur != start);
        fs.faces.push_back(std::move(walk));
    }
    for (std::size_t i = 0; i < fs.faces.size(); ++i)
        if (same_cyclic_sequence(fs.faces[i], g.outer_face)) {
            fs.outer_index = static_cast<int>(i);
            break;
        }
    return fs;
}

void validate_graph(const plane_graph& g) {
    if (g.vertices.empty()) fail("NotPlanarEmbedding", "empty vertex set");
    if (!std::is_sorted(g.vertices.begin(), g.vertices.end()) ||
        std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
        fail("InconsistentRotation", "vertex list not strictly ascending");
    if (g.rotation.size() != g.vertices.size())
        fail("InconsistentRotation", "rotation keys do not match vertex set");

    std::size_t degree_sum = 0;
    for (const auto& [v, rot] : g.rotation) {
        if (!g.has_vertex(v)) fail("InconsistentRotation", "rotation at unknown vertex");
        std::set<vid> seen;
        for (vid w : rot) {
            if (w == v) fail("InconsistentRotation", "self-loop at " + std::to_string(v));
            if (!g.has_vertex(w))
                fail("InconsistentRotation", "unknown neighbor " + std::to_string(w));
            if (!seen.insert(w).second)
                fail("InconsistentRotation", "duplicate neighbor " + std::to_string(w) +
                                                 " at " + std::to_string(v));
            if (!g.has_edge(v, w))
                fail("InconsistentRotation", "rotation lists non-edge (" +
                                                 std::to_string(v) + "," + std::to_string(w) + ")");
        }
        degree_sum += rot.size();
    }
    if (degree_sum != 2 * g.m())
        fail("InconsistentRotation", "rotation does not cover the edge set");
    for (const auto& [u, v] : g.edges) {
        const auto& ru = g.neighbors(u);
        const auto& rv = g.neighbors(v);
        if (std::find(ru.begin(), ru.end(), v) == ru.end() ||
            std::find(rv.begin(), rv.end(), u) == rv.end())
            fail("InconsistentRotation", "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") missing from rotation");
    }

    // connectivity
    if (!g.vertices.empty()) {
        std::set<vid> reached;
        std::queue<vid> q;
        q.push(g.vertices.front());
        reached.insert(g.vertices.front());
        while (!q.empty()) {
            vid v = q.front();
            q.pop();
            for (vid w : g.neighbors(v))
                if (reached.insert(w).second) q.push(w);
        }
        if (reached.size() != g.n())
            fail("NotPlanarEmbedding", "graph is disconnected");
    }

    face_set fs = extract_faces(g);
    long long euler = static_cast<long long>(g.n()) - static_cast<long long>(g.m()) +
                      static_cast<long long>(fs.faces.size());
    if (euler != 2)
        fail("NotPlanarEmbedding",
             "Euler count V-E+F = " + std::to_string(euler) + ", expected 2");
    if (fs.outer_index < 0)
        fail("NotPlanarEmbedding", "outer_face is not a face of the embedding");
}

plane_graph smooth_vertex(const plane_graph& g, vid v) {
    if (g.degree(v) != 2)
        fail("DegreeNotTwo", "vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(v)));
    vid u = g.neighbors(v)[0], w = g.neighbors(v)[1];
    if (u == w) fail("DegreeNotTwo", "parallel neighbors at " + std::to_string(v));
    if (g.has_edge(u, w))
        fail("WouldCreateMultiEdge", "edge (" + std::to_string(u) + "," +
                                         std::to_string(w) + ") already present");

    plane_graph out;
    out.vertices.reserve(g.n() - 1);
    for (vid x : g.vertices)
        if (x != v) out.vertices.push_back(x);
    for (const auto& e : g.edges)
        if (e.first != v && e.second != v) out.edges.push_back(e);
    out.edges.push_back(mk_edge(u, w));
    std::sort(out.edges.begin(), out.edges.end());

    for (const auto& [x, rot] : g.rotation) {
        if (x == v) continue;
        std::vector<vid> r = rot;
        if (x == u)
            std::replace(r.begin(), r.end(), v, w);
        else if (x == w)
            std::replace(r.begin(), r.end(), v, u);
        out.rotation[x] = std::move(r);
    }

    for (vid x : g.outer_face)
        if (x != v) out.outer_face.push_back(x);
    return out;
}

plane_graph subdivide_edge(const plane_graph& g, edge e, int count, std::vector<vid>* new_ids) {
    e = mk_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        fail("UnknownEdge", "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    if (count < 1) fail("PreconditionViolated", "subdivision count must be >= 1");

    vid next_id = g.vertices.back() + 1;
    std::vector<vid> chain(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) chain[static_cast<std::size_t>(i)] = next_id + i;
    if (new_ids) *new_ids = chain;

    const vid u = e.first, v = e.second;
    plane_graph out;
    out.vertices = g.vertices;
    out.vertices.insert(out.vertices.end(), chain.begin(), chain.end());
    for (const auto& f : g.edges)
        if (f != e) out.edges.push_back(f);
    std::vector<vid> path;
    path.push_back(u);
    path.insert(path.end(), chain.begin(), chain.end());
    path.push_back(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        out.edges.push_back(mk_edge(path[i], path[i + 1]));
    std::sort(out.edges.begin(), out.edges.end());

    for (const auto& [x, rot] : g.rotation) {
        std::vector<vid> r = rot;
        if (x == u)
            std::replace(r.begin(), r.end(), v, chain.front());
        else if (x == v)
            std::replace(r.begin(), r.end(), u, chain.back());
        out.rotation[x] = std::move(r);
    }
    for (std::size_t i = 0; i < chain.size(); ++i)
        out.rotation[chain[i]] = {path[i], path[i + 2]};

    // splice the chain into the outer walk wherever (u,v) or (v,u) occurs
    const auto& ow = g.outer_face;
    for (std::size_t i = 0; i < ow.size(); ++i) {
        vid a = ow[i], b = ow[(i + 1) % ow.size()];
        out.outer_face.push_back(a);
        if (a == u && b == v)
            out.outer_face.insert(out.outer_face.end(), chain.begin(), chain.end());
        else if (a == v && b == u)
            out.outer_face.insert(out.outer_face.end(), chain.rbegin(), chain.rend());
    }
    return out;
}

vertex_classes classify_vertices(const plane_graph& g) {
    vertex_classes c;
    std::set<edge> boundary;
    const auto& ow = g.outer_face;
    for (std::size_t i = 0; i < ow.size(); ++i) {
        c.outer_vertices.insert(ow[i]);
        boundary.insert(mk_edge(ow[i], ow[(i + 1) % ow.size()]));
    }
    for (vid v : g.vertices)
        if (!c.outer_vertices.count(v)) c.inner_vertices.insert(v);
    for (const auto& e : g.edges) {
        if (boundary.count(e))
            c.edge_kind[e] = edge_class::outer;
        else if (!c.outer_vertices.count(e.first) && !c.outer_vertices.count(e.second))
            c.edge_kind[e] = edge_class::inner;
        else
            c.edge_kind[e] = edge_class::mixed;
    }
    return c;
}

plane_graph plane_graph_from_coords(const std::vector<vid>& vertices,
                                    const std::vector<edge>& edges,
                                    const std::map<vid, point>& coords) {
    plane_graph g;
    g.vertices = vertices;
    std::sort(g.vertices.begin(), g.vertices.end());
    for (const auto& e : edges) g.edges.push_back(mk_edge(e.first, e.second));
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    for (vid v : g.vertices) {
        if (!coords.count(v)) fail("PreconditionViolated", "missing coordinates");
        g.rotation[v] = {};
    }
    for (const auto& [u, v] : g.edges) {
        g.rotation[u].push_back(v);
        g.rotation[v].push_back(u);
    }
    for (vid v : g.vertices) {
        const point& pv = coords.at(v);
        std::sort(g.rotation[v].begin(), g.rotation[v].end(), [&](vid a, vid b) {
            const point& pa = coords.at(a);
            const point& pb = coords.at(b);
            point da{pa.x - pv.x, pa.y - pv.y};
            point db{pb.x - pv.x, pb.y - pv.y};
            return ccw_angle_less(da, db);
        });
    }

    // outer face: start from the bottommost (then leftmost) vertex along its
    // highest-angle neighbor; the face left of that directed edge is outer
    vid v0 = g.vertices.front();
    for (vid v : g.vertices) {
        const point& p = coords.at(v);
        const point& q = coords.at(v0);
        if (p.y < q.y || (p.y == q.y && p.x < q.x)) v0 = v;
    }
    if (g.rotation[v0].empty()) fail("NotPlanarEmbedding", "isolated vertex");
    vid w = g.rotation[v0].back();
    std::vector<vid> walk;
    std::pair<vid, vid> start{v0, w}, cur = start;
    do {
        walk.push_back(cur.first);
        cur = face_next(g, cur.first, cur.second);
    } while (cur != start);
    g.outer_face = std::move(walk);
    validate_graph(g);
    return g;
}

plane_graph plane_graph_from_faces(const std::vector<std::vector<vid>>& faces,
                                   int outer_index) {
    if (outer_index < 0 || static_cast<std::size_t>(outer_index) >= faces.size())
        fail("PreconditionViolated", "outer_index out of range");
    plane_graph g;
    std::set<vid> vset;
    std::set<edge> eset;
    // at each corner (a, v, b) of a walk, neighbor a directly follows b in the
    // counterclockwise rotation at v
    std::map<vid, std::map<vid, vid>> succ;
    for (const auto& f : faces) {
        const std::size_t n = f.size();
        for (std::size_t i = 0; i < n; ++i) {
            vid a = f[(i + n - 1) % n], v = f[i], b = f[(i + 1) % n];
            vset.insert(v);
            eset.insert(mk_edge(v, b));
            auto [it, fresh] = succ[v].emplace(b, a);
            if (!fresh)
                fail("InconsistentRotation",
                     "directed edge (" + std::to_string(v) + "," + std::to_string(b) +
                         ") appears in two face walks");
        }
    }
    g.vertices.assign(vset.begin(), vset.end());
    g.edges.assign(eset.begin(), eset.end());
    for (vid v : g.vertices) {
        auto& s = succ[v];
        if (s.empty()) fail("InconsistentRotation", "isolated vertex in face walks");
        std::vector<vid> rot;
        vid start = s.begin()->first, cur = start;
        do {
            rot.push_back(cur);
            auto it = s.find(cur);
            if (it == s.end())
                fail("InconsistentRotation", "open rotation at " + std::to_string(v));
            cur = it->second;
        } while (cur != start && rot.size() <= s.size());
        if (rot.size() != s.size())
            fail("InconsistentRotation", "rotation at " + std::to_string(v) +
                                             " splits into several cycles");
        g.rotation[v] = std::move(rot);
    }
    g.outer_face = faces[static_cast<std::size_t>(outer_index)];
    validate_graph(g);
    return g;
}

void canonicalize(plane_graph& g) {
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    for (auto& [v, rot] : g.rotation) {
        if (rot.empty()) continue;
        auto mn = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), mn, rot.end());
    }
    if (!g.outer_face.empty()) {
        std::vector<vid> best = g.outer_face;
        std::vector<vid> cand = g.outer_face;
        for (std::size_t s = 1; s < g.outer_face.size(); ++s) {
            std::rotate(cand.begin(), cand.begin() + 1, cand.end());
            if (cand < best) best = cand;
        }
        g.outer_face = best;
    }
}

} // namespace elr
