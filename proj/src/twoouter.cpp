#include "elr/twoouter.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <set>

#include "elr/error.hpp"

namespace elr {

namespace {

std::string ename(const edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// face to the left of the directed step (u, v); same convention as extract_faces
std::vector<vid> trace_face(const plane_graph& g, vid u, vid v) {
    std::vector<vid> walk;
    vid a = u, b = v;
    do {
        walk.push_back(a);
        const auto& rot = g.neighbors(b);
        auto it = std::find(rot.begin(), rot.end(), a);
        if (it == rot.end())
            fail("InconsistentRotation", "edge " + ename({a, b}) + " not closed at " +
                                             std::to_string(b));
        std::size_t i = static_cast<std::size_t>(it - rot.begin());
        a = b;
        b = rot[(i + rot.size() - 1) % rot.size()];
    } while (!(a == u && b == v));
    return walk;
}

// restriction of g to a vertex/edge subset, rotation order preserved;
// the outer walk is traced from a directed step bordering the removed part
plane_graph restrict_graph(const plane_graph& g, const std::set<vid>& verts,
                           const std::set<edge>& keep, vid ou, vid ov) {
    plane_graph out;
    out.vertices.assign(verts.begin(), verts.end());
    out.edges.assign(keep.begin(), keep.end());
    for (vid v : out.vertices) {
        auto& r = out.rotation[v];
        for (vid w : g.neighbors(v))
            if (keep.count(mk_edge(v, w))) r.push_back(w);
    }
    out.outer_face = trace_face(out, ou, ov);
    return out;
}

} // namespace

two_outer_structure recognize_two_outer(const plane_graph& g) {
    validate_graph(g);
    vertex_classes cls = classify_vertices(g);
    if (cls.inner_vertices.empty())
        fail("NotInFamily", "no inner vertices");
    if (cls.outer_vertices.size() < 3)
        fail("NotInFamily", "outer boundary shorter than a cycle");

    // inner-induced adjacency, rotation order preserved
    std::map<vid, std::vector<vid>> iadj;
    std::size_t iedges = 0;
    for (vid v : cls.inner_vertices) {
        auto& lst = iadj[v];
        for (vid w : g.neighbors(v))
            if (cls.inner_vertices.count(w)) lst.push_back(w);
        iedges += lst.size();
    }
    iedges /= 2;
    const std::size_t n_in = cls.inner_vertices.size();

    {
        std::set<vid> seen{*cls.inner_vertices.begin()};
        std::vector<vid> todo{*cls.inner_vertices.begin()};
        while (!todo.empty()) {
            vid v = todo.back();
            todo.pop_back();
            for (vid w : iadj[v])
                if (seen.insert(w).second) todo.push_back(w);
        }
        if (seen.size() != n_in) fail("NotInFamily", "inner part is disconnected");
    }

    two_outer_structure out;
    out.graph = g;

    bool cycle = n_in >= 3 && iedges == n_in;
    if (cycle)
        for (const auto& [v, lst] : iadj) {
            (void)v;
            if (lst.size() != 2) {
                cycle = false;
                break;
            }
        }

    if (cycle) {
        vid start = *cls.inner_vertices.begin();
        vid prev = start;
        vid cur = std::min(iadj[start][0], iadj[start][1]);
        out.inner_cycle.push_back(start);
        while (cur != start) {
            out.inner_cycle.push_back(cur);
            const auto& l = iadj[cur];
            vid nxt = l[0] == prev ? l[1] : l[0];
            prev = cur;
            cur = nxt;
        }
        if (out.inner_cycle.size() != n_in)
            fail("NotInFamily", "inner cycle does not cover the inner part");
    } else {
        if (iedges + 1 != n_in)
            fail("NotInFamily", "inner part is neither a cycle nor a tree");
        std::set<vid> spine_set;
        if (n_in == 1) {
            out.spine = {*cls.inner_vertices.begin()};
        } else {
            std::set<vid> core(cls.inner_vertices);
            for (const auto& [v, lst] : iadj)
                if (lst.size() == 1) core.erase(v);
            if (core.empty()) {
                // a single inner edge: keep the smaller end as the spine
                out.spine = {*cls.inner_vertices.begin()};
            } else if (core.size() == 1) {
                out.spine = {*core.begin()};
            } else {
                std::map<vid, std::vector<vid>> cadj;
                std::vector<vid> ends;
                for (vid v : core) {
                    auto& l = cadj[v];
                    for (vid w : iadj[v])
                        if (core.count(w)) l.push_back(w);
                    if (l.size() > 2) fail("NotInFamily", "inner part is not a caterpillar");
                    if (l.size() <= 1) ends.push_back(v);
                }
                if (ends.size() != 2) fail("NotInFamily", "inner part is not a caterpillar");
                vid prev = -1, cur = std::min(ends[0], ends[1]);
                while (true) {
                    out.spine.push_back(cur);
                    vid nxt = -1;
                    for (vid w : cadj[cur])
                        if (w != prev) nxt = w;
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                }
                if (out.spine.size() != core.size())
                    fail("NotInFamily", "inner part is not a caterpillar");
            }
            spine_set.insert(out.spine.begin(), out.spine.end());
            for (vid v : cls.inner_vertices) {
                if (spine_set.count(v)) continue;
                if (iadj[v].size() != 1 || !spine_set.count(iadj[v][0]))
                    fail("NotInFamily", "inner part is not a caterpillar");
            }
        }
        if (spine_set.empty()) spine_set.insert(out.spine.begin(), out.spine.end());
        for (vid p : out.spine) {
            auto& lst = out.leaves[p];
            for (vid w : g.neighbors(p))
                if (cls.inner_vertices.count(w) && !spine_set.count(w)) lst.push_back(w);
        }
    }

    const auto& ow = g.outer_face;
    std::set<vid> wset(ow.begin(), ow.end());
    bool simple = wset.size() == ow.size();
    std::size_t ooe = 0;
    for (const auto& e : g.edges)
        if (cls.outer_vertices.count(e.first) && cls.outer_vertices.count(e.second)) ++ooe;
    bool plain = simple && ooe == ow.size();
    out.kind = cycle ? (plain ? "cycle-cycle" : "outerplanar-cycle")
                     : (plain ? "cycle-caterpillar" : "outerplanar-caterpillar");
    return out;
}

two_outer_structure triangulate_pockets(const two_outer_structure& s) {
    plane_graph g = s.graph;
    bool changed = true;
    while (changed) {
        changed = false;
        vertex_classes cls = classify_vertices(g);
        face_set fs = extract_faces(g);
        for (std::size_t f = 0; f < fs.faces.size() && !changed; ++f) {
            if (static_cast<int>(f) == fs.outer_index) continue;
            const auto& w = fs.faces[f];
            const std::size_t m = w.size();
            if (m < 4) continue;
            for (std::size_t a = 0; a < m && !changed; ++a) {
                for (std::size_t b = a + 2; b < m; ++b) {
                    if (a == 0 && b == m - 1) continue; // cyclically adjacent
                    vid x = w[a], y = w[b];
                    if (x == y) continue;
                    if (cls.outer_vertices.count(x) == cls.outer_vertices.count(y))
                        continue; // want one outer, one inner endpoint
                    if (g.has_edge(x, y)) continue;
                    std::vector<std::vector<vid>> nf;
                    int no = -1;
                    for (std::size_t q = 0; q < fs.faces.size(); ++q) {
                        if (q == f) continue;
                        if (static_cast<int>(q) == fs.outer_index)
                            no = static_cast<int>(nf.size());
                        nf.push_back(fs.faces[q]);
                    }
                    nf.emplace_back(w.begin() + a, w.begin() + b + 1);
                    std::vector<vid> rest(w.begin() + b, w.end());
                    rest.insert(rest.end(), w.begin(), w.begin() + a + 1);
                    nf.push_back(std::move(rest));
                    g = plane_graph_from_faces(nf, no);
                    changed = true;
                    break;
                }
            }
        }
    }
    two_outer_structure out = recognize_two_outer(g);
    if (out.kind != s.kind)
        fail("ConstructionGap",
             "pocket triangulation changed the kind from " + s.kind + " to " + out.kind);
    return out;
}

level_drawing draw_cycle_cycle(const two_outer_structure& s) {
    if (s.kind != "cycle-cycle")
        fail("NotCycleCycle", "structure kind is " + s.kind);
    two_outer_structure st = triangulate_pockets(s);
    const plane_graph& g = st.graph;
    vertex_classes cls = classify_vertices(g);
    const int k = static_cast<int>(st.inner_cycle.size());

    // u_1: smallest outer vertex whose inner fan is a proper arc of the cycle
    vid u1 = -1;
    int kp = 0;
    for (vid u : g.vertices) {
        if (!cls.outer_vertices.count(u)) continue;
        int cnt = 0;
        for (vid w : g.neighbors(u))
            if (cls.inner_vertices.count(w)) ++cnt;
        if (cnt >= 2 && cnt < k) {
            u1 = u;
            kp = cnt;
            break;
        }
    }
    if (u1 < 0)
        fail("NotCycleCycle", "no outer vertex sees a proper arc of the inner cycle");

    const auto& rot = g.neighbors(u1);
    const int deg = static_cast<int>(rot.size());
    int outer_nbrs = 0;
    for (vid w : rot)
        if (cls.outer_vertices.count(w)) ++outer_nbrs;
    if (outer_nbrs != 2 || deg != kp + 2)
        fail("NotCycleCycle", "outer cycle is not simple at " + std::to_string(u1));
    int p = -1;
    for (int i = 0; i < deg; ++i)
        if (cls.outer_vertices.count(rot[i]) &&
            cls.inner_vertices.count(rot[(i + 1) % deg])) {
            p = i;
            break;
        }
    if (p < 0) fail("NotCycleCycle", "no inner fan at " + std::to_string(u1));
    std::vector<vid> tops;
    for (int i = 1; i <= kp; ++i) {
        vid w = rot[(p + i) % deg];
        if (!cls.inner_vertices.count(w))
            fail("NotCycleCycle", "inner neighbors of " + std::to_string(u1) +
                                      " are not contiguous");
        tops.push_back(w);
    }
    vid uh = rot[p];
    vid u2 = rot[(p + kp + 1) % deg];
    if (!g.has_edge(tops.front(), uh) || !g.has_edge(tops.back(), u2))
        fail("NotCycleCycle", "fan corners are not closed by edges");

    // complete the inner cycle from v_{k'} onward
    std::map<vid, std::vector<vid>> iadj;
    for (vid v : cls.inner_vertices)
        for (vid w : g.neighbors(v))
            if (cls.inner_vertices.count(w)) iadj[v].push_back(w);
    std::vector<vid> rest;
    {
        vid prev = kp >= 2 ? tops[kp - 2] : -1;
        vid cur = tops.back();
        while (true) {
            const auto& l = iadj[cur];
            if (l.size() != 2) fail("NotCycleCycle", "inner part is not a simple cycle");
            vid nxt = l[0] == prev ? l[1] : l[0];
            if (nxt == tops.front()) break;
            rest.push_back(nxt);
            prev = cur;
            cur = nxt;
            if (static_cast<int>(rest.size()) > k)
                fail("NotCycleCycle", "inner cycle walk does not close");
        }
        if (static_cast<int>(tops.size() + rest.size()) != k)
            fail("NotCycleCycle", "inner cycle walk does not close");
    }

    // outer cycle from u_1 toward u_2
    std::vector<vid> ocyc{u1};
    {
        vid prev = u1, cur = u2;
        while (cur != u1) {
            ocyc.push_back(cur);
            vid nxt = -1;
            for (vid w : g.neighbors(cur))
                if (cls.outer_vertices.count(w) && w != prev) nxt = w;
            if (nxt < 0) fail("NotCycleCycle", "outer cycle walk does not close");
            prev = cur;
            cur = nxt;
            if (ocyc.size() > cls.outer_vertices.size())
                fail("NotCycleCycle", "outer cycle walk does not close");
        }
        if (ocyc.size() != cls.outer_vertices.size() || ocyc.back() != uh)
            fail("NotCycleCycle", "outer cycle walk does not close");
    }

    level_drawing d;
    d.graph = g;
    d.order[0] = {u1};
    d.order[1] = tops;
    d.order[2].assign(rest.rbegin(), rest.rend());
    d.order[3].assign(ocyc.rbegin(), ocyc.rend() - 1); // u_h ... u_2
    for (const auto& [l, row] : d.order)
        for (vid v : row) d.level[v] = l;

    const int s1 = static_cast<int>(d.order[1].size());
    const int s2 = static_cast<int>(d.order[2].size());
    for (const auto& e : g.edges) {
        int span = std::abs(d.level.at(e.first) - d.level.at(e.second));
        if (span <= 1) continue;
        vid top = d.level.at(e.first) < d.level.at(e.second) ? e.first : e.second;
        vid bot = top == e.first ? e.second : e.first;
        if (span == 3) {
            if (top != u1 || (bot != u2 && bot != uh))
                fail("ConstructionGap", "unexpected tall edge " + ename(e));
            d.gaps[e] = bot == uh ? std::map<int, int>{{1, 0}, {2, 0}}
                                  : std::map<int, int>{{1, s1}, {2, s2}};
        } else {
            if (top == tops.front())
                d.gaps[e] = {{2, 0}};
            else if (top == tops.back())
                d.gaps[e] = {{2, s2}};
            else
                fail("ConstructionGap", "unexpected spanning edge " + ename(e));
        }
    }

    swlp_verdict v = validate_swlp(d, 3);
    if (!v.ok) fail("ConstructionGap", v.failures.front());
    return d;
}

attachment_decomposition decompose_attachments(const plane_graph& g) {
    two_outer_structure s = recognize_two_outer(g);
    attachment_decomposition out;
    if (s.kind == "cycle-cycle" || s.kind == "cycle-caterpillar") {
        out.core = std::move(s);
        return out;
    }
    const std::string core_kind =
        s.kind == "outerplanar-cycle" ? "cycle-cycle" : "cycle-caterpillar";

    vertex_classes cls = classify_vertices(g);
    face_set fs = extract_faces(g);
    const int nf = static_cast<int>(fs.faces.size());
    std::vector<char> region(static_cast<std::size_t>(nf), 0);
    for (int f = 0; f < nf; ++f) {
        if (f == fs.outer_index) continue;
        for (vid v : fs.faces[static_cast<std::size_t>(f)])
            if (cls.inner_vertices.count(v)) {
                region[static_cast<std::size_t>(f)] = 1;
                break;
            }
    }
    std::map<std::pair<vid, vid>, int> step_face;
    for (int f = 0; f < nf; ++f) {
        const auto& w = fs.faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < w.size(); ++i)
            step_face[{w[i], w[(i + 1) % w.size()]}] = f;
    }

    // core boundary: steps with the ring region on the right only
    std::map<vid, vid> bnext;
    for (const auto& [st, f] : step_face) {
        int rf = step_face.at({st.second, st.first});
        if (!region[static_cast<std::size_t>(f)] && region[static_cast<std::size_t>(rf)]) {
            if (bnext.count(st.first))
                fail("NotInFamily", "core boundary is not a simple cycle");
            bnext[st.first] = st.second;
        }
    }
    if (bnext.empty()) fail("NotInFamily", "no core boundary found");
    std::vector<vid> cwalk{bnext.begin()->first};
    while (true) {
        auto it = bnext.find(cwalk.back());
        if (it == bnext.end()) fail("NotInFamily", "core boundary is not closed");
        if (it->second == cwalk.front()) break;
        cwalk.push_back(it->second);
        if (cwalk.size() > bnext.size())
            fail("NotInFamily", "core boundary is not a simple cycle");
    }
    if (cwalk.size() != bnext.size())
        fail("NotInFamily", "core boundary is not a single cycle");

    // core subgraph = everything bordering the ring region
    std::set<vid> cverts;
    std::set<edge> cedges;
    for (int f = 0; f < nf; ++f) {
        if (!region[static_cast<std::size_t>(f)]) continue;
        const auto& w = fs.faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < w.size(); ++i) {
            cverts.insert(w[i]);
            cedges.insert(mk_edge(w[i], w[(i + 1) % w.size()]));
        }
    }
    plane_graph core_g = restrict_graph(g, cverts, cedges, cwalk[0], bnext.at(cwalk[0]));
    out.core = recognize_two_outer(core_g);
    if (out.core.kind != core_kind)
        fail("NotInFamily", "core reduces to " + out.core.kind + ", expected " + core_kind);

    // group the remaining bounded faces into attachments
    std::vector<int> parent(static_cast<std::size_t>(nf));
    for (int f = 0; f < nf; ++f) parent[static_cast<std::size_t>(f)] = f;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto pocket = [&](int f) {
        return f != fs.outer_index && !region[static_cast<std::size_t>(f)];
    };
    for (const auto& e : g.edges) {
        int f1 = step_face.at({e.first, e.second});
        int f2 = step_face.at({e.second, e.first});
        if (pocket(f1) && pocket(f2)) parent[static_cast<std::size_t>(find(f1))] = find(f2);
    }
    std::map<int, std::vector<int>> groups;
    for (int f = 0; f < nf; ++f)
        if (pocket(f)) groups[find(f)].push_back(f);

    std::map<int, std::set<vid>> gverts;
    std::map<int, std::set<edge>> gedges;
    for (const auto& [root, faces] : groups)
        for (int f : faces) {
            const auto& w = fs.faces[static_cast<std::size_t>(f)];
            for (std::size_t i = 0; i < w.size(); ++i) {
                gverts[root].insert(w[i]);
                gedges[root].insert(mk_edge(w[i], w[(i + 1) % w.size()]));
            }
        }

    // pendant trees border the outer face on both sides; absorb each into the
    // attachment it hangs off
    std::set<edge> bridges;
    std::map<vid, std::vector<vid>> badj;
    for (const auto& e : g.edges)
        if (step_face.at({e.first, e.second}) == fs.outer_index &&
            step_face.at({e.second, e.first}) == fs.outer_index) {
            bridges.insert(e);
            badj[e.first].push_back(e.second);
            badj[e.second].push_back(e.first);
        }
    std::set<vid> tseen;
    for (const auto& [start, nbrs] : badj) {
        (void)nbrs;
        if (tseen.count(start)) continue;
        std::set<vid> tverts{start};
        std::vector<vid> todo{start};
        while (!todo.empty()) {
            vid v = todo.back();
            todo.pop_back();
            tseen.insert(v);
            for (vid w : badj[v])
                if (tverts.insert(w).second) todo.push_back(w);
        }
        std::vector<vid> anchors;
        for (vid v : tverts)
            if (g.degree(v) > static_cast<int>(badj[v].size())) anchors.push_back(v);
        if (anchors.size() != 1)
            fail("NotInFamily", "pendant tree joins several parts of the boundary");
        int home = -1;
        for (const auto& [root, vsroot] : gverts)
            if (vsroot.count(anchors.front()) && (home < 0 || root < home)) home = root;
        if (home < 0)
            fail("NotInFamily", "pendant tree does not hang off an attachment");
        gverts[home].insert(tverts.begin(), tverts.end());
        for (vid v : tverts)
            for (vid w : badj[v]) gedges[home].insert(mk_edge(v, w));
    }

    std::size_t covered = cedges.size();
    for (const auto& [root, faces] : groups) {
        const std::set<vid>& bverts = gverts.at(root);
        const std::set<edge>& bedges = gedges.at(root);
        std::set<int> fset(faces.begin(), faces.end());
        // a directed step bordering the outside of the group
        vid ou = -1, ov = -1;
        for (int f : faces) {
            const auto& w = fs.faces[static_cast<std::size_t>(f)];
            for (std::size_t i = 0; i < w.size() && ou < 0; ++i) {
                vid x = w[i], y = w[(i + 1) % w.size()];
                if (!fset.count(step_face.at({y, x}))) {
                    ou = y;
                    ov = x;
                }
            }
            if (ou >= 0) break;
        }
        attachment_component comp;
        try {
            comp.block = restrict_graph(g, bverts, bedges, ou, ov);
            validate_graph(comp.block);
        } catch (const elr_error& err) {
            fail("NotInFamily", std::string("attachment is not a plane block: ") + err.what());
        }
        std::set<vid> onw(comp.block.outer_face.begin(), comp.block.outer_face.end());
        for (vid v : comp.block.vertices)
            if (!onw.count(v))
                fail("NotInFamily", "attachment is not outerplanar at " + std::to_string(v));
        std::vector<edge> shared;
        for (const auto& e : comp.block.edges)
            if (cedges.count(e)) shared.push_back(e);
        if (shared.size() != 1)
            fail("NotInFamily", "attachment shares " + std::to_string(shared.size()) +
                                    " edges with the core boundary");
        comp.shared = shared.front();
        for (vid v : comp.block.vertices)
            if (cverts.count(v) && v != comp.shared.first && v != comp.shared.second)
                fail("NotInFamily", "attachment touches the core outside its shared edge");
        covered += bedges.size() - 1;
        out.components.push_back(std::move(comp));
    }
    if (covered != g.m())
        fail("NotInFamily", "graph has parts not attached across a boundary edge");

    std::sort(out.components.begin(), out.components.end(),
              [](const attachment_component& a, const attachment_component& b) {
                  vid ma = a.block.vertices.front(), mb = b.block.vertices.front();
                  return ma != mb ? ma < mb : a.shared < b.shared;
              });
    return out;
}

level_drawing glue_attachments(const level_drawing& core,
                               const std::vector<attachment_component>& components,
                               const plane_graph& whole) {
    level_drawing d = core;
    d.graph = whole;
    if (components.empty()) {
        normalize_levels(d);
        return d;
    }
    int bottom = 0;
    for (const auto& [v, l] : core.level) {
        (void)v;
        bottom = std::max(bottom, l);
    }

    // placement plans: target row -> ordered blocks of new vertices
    std::map<int, std::vector<std::pair<long long, std::vector<vid>>>> plan;
    std::vector<vid> left_extras, right_extras; // prefix/suffix for the bottom row
    struct long_edge {
        edge e;
        bool left;
    };
    std::vector<long_edge> long_edges;

    for (const auto& comp : components) {
        vid x = comp.shared.first, y = comp.shared.second;
        if (!core.level.count(x) || !core.level.count(y))
            fail("ConstructionGap", "seam " + ename(comp.shared) + " is not on the core");
        int lx = core.level.at(x), ly = core.level.at(y);
        if (lx == ly && (lx == bottom || lx == 0)) {
            const bool below = lx == bottom;
            int px = core.pos(x), py = core.pos(y);
            if (std::abs(px - py) != 1)
                fail("ConstructionGap", "seam " + ename(comp.shared) +
                                            " is not order-consecutive");
            vid lv = px < py ? x : y;
            vid rv = lv == x ? y : x;
            level_drawing bd = outerplanar_1swlp(comp.block, anchor_mode::edge_on_top,
                                                 {lv, rv});
            if (!bd.gaps.empty())
                fail("ConstructionGap", "attachment drawing is not flat");
            long long key = std::min(px, py);
            for (const auto& [l, row] : bd.order) {
                if (l == 0) continue;
                int target = below ? bottom + l : -l;
                plan[target].push_back({key, row});
                for (vid v : row) {
                    if (d.level.count(v))
                        fail("ConstructionGap", "attachment reuses vertex " + std::to_string(v));
                    d.level[v] = target;
                }
            }
        } else if (std::min(lx, ly) == 0 && std::max(lx, ly) == bottom) {
            vid t = lx == 0 ? x : y;
            vid b = t == x ? y : x;
            // the side is decided by the corners the seam joins; gap positions
            // alone are ambiguous when an interior row is empty (0 is then both
            // the leftmost and the rightmost slot)
            const auto& brow = core.order.at(bottom);
            const auto& trow = core.order.at(0);
            bool left;
            if (trow.front() == t && brow.front() == b)
                left = true;
            else if (trow.back() == t && brow.back() == b)
                left = false;
            else
                fail("ConstructionGap", "seam " + ename(comp.shared) +
                                            " does not join drawing corners");
            auto rec = d.gaps.find(comp.shared);
            if (rec == d.gaps.end())
                fail("ConstructionGap", "seam " + ename(comp.shared) + " has no gap record");
            for (const auto& [gl, gp] : rec->second) {
                auto it = core.order.find(gl);
                int width = it == core.order.end() ? 0 : static_cast<int>(it->second.size());
                if (gp != (left ? 0 : width))
                    fail("ConstructionGap", "seam " + ename(comp.shared) +
                                               " does not hug the drawing boundary");
            }
            level_drawing bd = outerplanar_1swlp(comp.block, anchor_mode::edge_leftmost,
                                                 {t, b});
            if (!bd.gaps.empty())
                fail("ConstructionGap", "attachment drawing is not flat");
            if (left) bd = mirror(bd, true, false);
            const auto& row1 = bd.order.at(1);
            for (vid v : row1) {
                if (v == b) continue;
                if (d.level.count(v))
                    fail("ConstructionGap", "attachment reuses vertex " + std::to_string(v));
                d.level[v] = bottom;
                if (left)
                    left_extras.push_back(v);
                else
                    right_extras.push_back(v);
                if (comp.block.has_edge(t, v)) long_edges.push_back({mk_edge(t, v), left});
            }
            long long key = left ? LLONG_MIN : LLONG_MAX;
            for (const auto& [l, row] : bd.order) {
                if (l <= 1) continue;
                int target = bottom + l - 1;
                plan[target].push_back({key, row});
                for (vid v : row) {
                    if (d.level.count(v))
                        fail("ConstructionGap", "attachment reuses vertex " + std::to_string(v));
                    d.level[v] = target;
                }
            }
        } else {
            fail("ConstructionGap", "seam " + ename(comp.shared) +
                                        " spans unexpected core levels");
        }
    }

    // assemble the extended bottom row and the new rows
    auto& brow = d.order[bottom];
    brow.insert(brow.begin(), left_extras.begin(), left_extras.end());
    brow.insert(brow.end(), right_extras.begin(), right_extras.end());
    for (auto& [target, blocks] : plan) {
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& row = d.order[target];
        for (auto& [key, verts] : blocks) {
            (void)key;
            row.insert(row.end(), verts.begin(), verts.end());
        }
    }

    for (const auto& le : long_edges) {
        std::map<int, int> rec;
        for (int l = 1; l < bottom; ++l)
            rec[l] = le.left ? 0 : static_cast<int>(d.order.at(l).size());
        d.gaps[le.e] = std::move(rec);
    }

    normalize_levels(d);
    return d;
}

level_drawing draw_outerplanar_cycle(const plane_graph& g) {
    two_outer_structure s = recognize_two_outer(g);
    if (s.kind == "cycle-cycle") return draw_cycle_cycle(s);
    if (s.kind != "outerplanar-cycle")
        fail("NotInFamily", "kind is " + s.kind);
    two_outer_structure st = triangulate_pockets(s);
    attachment_decomposition dec = decompose_attachments(st.graph);
    level_drawing cd = draw_cycle_cycle(dec.core);
    level_drawing d = glue_attachments(cd, dec.components, st.graph);
    swlp_verdict v = validate_swlp(d, 3);
    if (!v.ok) fail("ConstructionGap", v.failures.front());
    return d;
}

} // namespace elr
