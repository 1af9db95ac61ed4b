#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <set>

#include "elr/error.hpp"
#include "elr/twoouter.hpp"

namespace elr {

namespace {

std::string vname(vid v) { return std::to_string(v); }

// spine index (1-based) per spine vertex
std::map<vid, int> spine_index(const two_outer_structure& s) {
    std::map<vid, int> idx;
    for (std::size_t i = 0; i < s.spine.size(); ++i)
        idx[s.spine[i]] = static_cast<int>(i) + 1;
    return idx;
}

std::set<vid> leaf_set(const two_outer_structure& s) {
    std::set<vid> out;
    for (const auto& [p, lst] : s.leaves) {
        (void)p;
        out.insert(lst.begin(), lst.end());
    }
    return out;
}

struct leaf_info {
    vid parent = -1;
    int pindex = 0;          // 1-based spine index of the parent
    std::vector<vid> outer;  // boundary support, 1 or 2 vertices
    int rank = 0;            // order among the parent's leaves
};

// per-leaf support and deterministic sibling rank
std::map<vid, leaf_info> collect_leaves(const two_outer_structure& st,
                                        const vertex_classes& cls) {
    const plane_graph& g = st.graph;
    std::map<vid, int> sidx = spine_index(st);
    std::map<vid, leaf_info> info;
    for (const auto& [p, lst] : st.leaves) {
        // ranks follow the parent rotation starting at a fixed spine anchor
        int pi = sidx.at(p);
        vid anchor;
        if (pi >= 2)
            anchor = st.spine[static_cast<std::size_t>(pi) - 2];
        else if (static_cast<int>(st.spine.size()) >= 2)
            anchor = st.spine[1];
        else
            anchor = *std::min_element(g.neighbors(p).begin(), g.neighbors(p).end());
        const auto& rot = g.neighbors(p);
        auto it = std::find(rot.begin(), rot.end(), anchor);
        std::size_t start = it == rot.end() ? 0 : static_cast<std::size_t>(it - rot.begin());
        std::set<vid> mine(lst.begin(), lst.end());
        int next_rank = 0;
        for (std::size_t q = 0; q < rot.size(); ++q) {
            vid w = rot[(start + q) % rot.size()];
            if (!mine.count(w)) continue;
            leaf_info& li = info[w];
            li.parent = p;
            li.pindex = pi;
            li.rank = next_rank++;
            for (vid x : g.neighbors(w))
                if (cls.outer_vertices.count(x)) li.outer.push_back(x);
        }
    }
    return info;
}

// cyclic run a..b inclusive
std::vector<vid> cyc_run(const std::vector<vid>& c, int a, int b) {
    std::vector<vid> out;
    int h = static_cast<int>(c.size());
    for (int q = a;; q = (q + 1) % h) {
        out.push_back(c[static_cast<std::size_t>(q)]);
        if (q == b) break;
    }
    return out;
}

struct row_item {
    std::array<long long, 4> key;
    vid leaf = -1;   // set for leaf vertices
    edge strand;     // set for span-2 boundary-to-spine edges
    bool is_strand = false;
};

} // namespace

mixed_classification classify_mixed(const two_outer_structure& s) {
    if (s.kind != "cycle-caterpillar")
        fail("NotCycleCaterpillar", "structure kind is " + s.kind);
    const plane_graph& g = s.graph;
    vertex_classes cls = classify_vertices(g);
    std::set<vid> leaves = leaf_set(s);
    std::map<vid, int> sidx = spine_index(s);
    const int k = static_cast<int>(s.spine.size());

    // rotations with leaf vertices stripped
    std::map<vid, std::vector<vid>> rot;
    for (vid v : g.vertices) {
        if (leaves.count(v)) continue;
        auto& r = rot[v];
        for (vid w : g.neighbors(v))
            if (!leaves.count(w)) r.push_back(w);
    }

    mixed_classification out;
    std::map<vid, std::array<int, 2>> sides; // per boundary vertex: left/right counts
    for (vid u : g.vertices) {
        if (!cls.outer_vertices.count(u)) continue;
        for (vid w : rot.at(u)) {
            auto it = sidx.find(w);
            if (it == sidx.end()) continue;
            int j = it->second;
            edge e = mk_edge(u, w);
            if (j == 1 || j == k) {
                out.side[e] = mixed_side::extreme;
                continue;
            }
            // counterclockwise arc of rot(v_j) from v_{j-1} to v_{j+1}:
            // vertices inside it hang on one side of the spine path
            const auto& rj = rot.at(w);
            vid prev = s.spine[static_cast<std::size_t>(j) - 2];
            vid next = s.spine[static_cast<std::size_t>(j)];
            auto pit = std::find(rj.begin(), rj.end(), prev);
            if (pit == rj.end())
                fail("InconsistentRotation", "spine path broken at " + vname(w));
            bool inside = false;
            for (std::size_t q = 1; q < rj.size(); ++q) {
                vid x = rj[(static_cast<std::size_t>(pit - rj.begin()) + q) % rj.size()];
                if (x == next) break;
                if (x == u) {
                    inside = true;
                    break;
                }
            }
            out.side[e] = inside ? mixed_side::right : mixed_side::left;
            auto& cnt = sides[u];
            ++cnt[inside ? 1 : 0];
        }
    }

    for (const auto& [u, cnt] : sides) {
        if (cnt[0] == 0 || cnt[1] == 0) continue;
        out.both_sided.push_back(u);
        bool at1 = g.has_edge(u, s.spine.front());
        bool atk = g.has_edge(u, s.spine.back());
        if (!at1 && !atk)
            fail("NotCycleCaterpillar",
                 "vertex " + vname(u) + " reaches both sides away from the spine ends");
        int best_l = 0, best_r = 0; // extreme spine indices of the side targets
        for (vid w : rot.at(u)) {
            auto it = sidx.find(w);
            if (it == sidx.end() || it->second == 1 || it->second == k) continue;
            mixed_side ms = out.side.at(mk_edge(u, w));
            int j = it->second;
            if (at1) { // wrap at v_1: the deepest reach on each side matters
                if (ms == mixed_side::left && j > best_l) best_l = j;
                if (ms == mixed_side::right && j > best_r) best_r = j;
            } else { // wrap at v_k: the shallowest reach on each side matters
                if (ms == mixed_side::left && (best_l == 0 || j < best_l)) best_l = j;
                if (ms == mixed_side::right && (best_r == 0 || j < best_r)) best_r = j;
            }
        }
        if (at1) {
            if (out.v_l1 >= 0)
                fail("NotCycleCaterpillar", "two boundary vertices wrap the same spine end");
            out.v_l1 = s.spine[static_cast<std::size_t>(best_l) - 1];
            out.v_r1 = s.spine[static_cast<std::size_t>(best_r) - 1];
        } else {
            if (out.v_l2 >= 0)
                fail("NotCycleCaterpillar", "two boundary vertices wrap the same spine end");
            out.v_l2 = s.spine[static_cast<std::size_t>(best_l) - 1];
            out.v_r2 = s.spine[static_cast<std::size_t>(best_r) - 1];
        }
    }
    if (out.both_sided.size() > 2)
        fail("NotCycleCaterpillar", "more than two boundary vertices reach both sides");
    return out;
}

level_drawing draw_cycle_caterpillar(const two_outer_structure& s) {
    if (s.kind != "cycle-caterpillar")
        fail("NotCycleCaterpillar", "structure kind is " + s.kind);
    two_outer_structure st = triangulate_pockets(s);
    const plane_graph& g = st.graph;
    vertex_classes cls = classify_vertices(g);
    const int k = static_cast<int>(st.spine.size());
    std::map<vid, int> sidx = spine_index(st);
    std::set<vid> leaves = leaf_set(st);

    std::map<vid, leaf_info> linfo = collect_leaves(st, cls);
    for (auto& [l, li] : linfo) {
        if (li.outer.empty())
            fail("ConstructionGap", "leaf " + vname(l) + " has no boundary support");
        if (li.outer.size() > 2)
            fail("NotCycleCaterpillar", "leaf " + vname(l) + " touches the boundary " +
                                            std::to_string(li.outer.size()) + " times");
        if (li.outer.size() == 2 && !g.has_edge(li.outer[0], li.outer[1]))
            fail("NotCycleCaterpillar",
                 "leaf " + vname(l) + " spans a non-adjacent boundary pair");
    }
    classify_mixed(st); // family checks on the mixed structure

    // spine targets per boundary vertex
    std::map<vid, std::vector<int>> targets;
    for (vid u : g.vertices) {
        if (!cls.outer_vertices.count(u)) continue;
        auto& t = targets[u];
        for (vid w : g.neighbors(u)) {
            auto it = sidx.find(w);
            if (it != sidx.end()) t.push_back(it->second);
        }
        std::sort(t.begin(), t.end());
        if (t.empty())
            fail("ConstructionGap", "boundary vertex " + vname(u) + " has no spine contact");
    }

    const std::vector<vid>& oc0 = g.outer_face;
    const int h = static_cast<int>(oc0.size());

    std::string why = "no planar boundary split";
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<vid> oc = oc0;
        if (dir) std::reverse(oc.begin(), oc.end());
        for (int ci = 0; ci < h; ++ci) {
            for (int cj = 0; cj < h; ++cj) {
                if (ci == cj) continue;
                std::vector<vid> top = cyc_run(oc, (ci + 1) % h, cj);
                std::vector<vid> bottom = cyc_run(oc, (cj + 1) % h, ci);
                std::reverse(bottom.begin(), bottom.end());

                // per-row target monotonicity
                bool ok = true;
                for (const auto* row : {&top, &bottom}) {
                    for (std::size_t q = 0; ok && q + 1 < row->size(); ++q)
                        if (targets.at((*row)[q]).back() > targets.at((*row)[q + 1]).front())
                            ok = false;
                }
                if (!ok) continue;

                std::map<vid, int> pos0, pos4;
                for (std::size_t q = 0; q < top.size(); ++q)
                    pos0[top[q]] = static_cast<int>(q);
                for (std::size_t q = 0; q < bottom.size(); ++q)
                    pos4[bottom[q]] = static_cast<int>(q);
                edge cut_l = mk_edge(top.front(), bottom.front());
                edge cut_r = mk_edge(top.back(), bottom.back());

                std::vector<row_item> items1, items3;
                struct cross_rec {
                    vid leaf;
                    vid far;
                    bool upper; // leaf on the upper leaf row
                    bool left;
                };
                std::vector<cross_rec> crosses;
                bool pole_l = false, pole_r = false;

                for (const auto& [l, li] : linfo) {
                    if (li.outer.size() == 2) {
                        edge oe = mk_edge(li.outer[0], li.outer[1]);
                        if (oe == cut_l || oe == cut_r) {
                            const bool left = oe == cut_l;
                            bool& used = left ? pole_l : pole_r;
                            if (used) {
                                ok = false;
                                break;
                            }
                            used = true;
                            vid t = pos0.count(li.outer[0]) ? li.outer[0] : li.outer[1];
                            vid b = t == li.outer[0] ? li.outer[1] : li.outer[0];
                            // the near anchor's spine reach must clear the parent
                            bool top_safe = left ? targets.at(t).front() >= li.pindex
                                                 : targets.at(t).back() <= li.pindex;
                            bool bot_safe = left ? targets.at(b).front() >= li.pindex
                                                 : targets.at(b).back() <= li.pindex;
                            if (!top_safe && !bot_safe) {
                                ok = false;
                                break;
                            }
                            row_item it;
                            it.key = left ? std::array<long long, 4>{-1, -1, -1, 0}
                                          : std::array<long long, 4>{LLONG_MAX, LLONG_MAX,
                                                                     LLONG_MAX, 0};
                            it.leaf = l;
                            (top_safe ? items1 : items3).push_back(it);
                            crosses.push_back({l, top_safe ? b : t, top_safe, left});
                            continue;
                        }
                    }
                    bool on_top = pos0.count(li.outer.front()) != 0;
                    for (vid u : li.outer)
                        if ((pos0.count(u) != 0) != on_top) ok = false;
                    if (!ok) break;
                    const auto& pos = on_top ? pos0 : pos4;
                    row_item it;
                    if (li.outer.size() == 1)
                        it.key = {pos.at(li.outer[0]), li.pindex, 1, li.rank};
                    else
                        it.key = {std::min(pos.at(li.outer[0]), pos.at(li.outer[1])),
                                  li.pindex, 3, li.rank};
                    it.leaf = l;
                    (on_top ? items1 : items3).push_back(it);
                }
                if (!ok) continue;

                for (const auto& [u, ts] : targets) {
                    bool on_top = pos0.count(u) != 0;
                    const auto& pos = on_top ? pos0 : pos4;
                    for (int j : ts) {
                        row_item it;
                        it.key = {pos.at(u), j, 2, 0};
                        it.strand = mk_edge(u, st.spine[static_cast<std::size_t>(j) - 1]);
                        it.is_strand = true;
                        (on_top ? items1 : items3).push_back(it);
                    }
                }

                level_drawing d;
                d.graph = g;
                d.order[0] = top;
                d.order[2] = st.spine;
                d.order[4] = bottom;
                for (auto* items : {&items1, &items3}) {
                    std::stable_sort(items->begin(), items->end(),
                                     [](const row_item& a, const row_item& b) {
                                         return a.key < b.key;
                                     });
                    const int lvl = items == &items1 ? 1 : 3;
                    auto& row = d.order[lvl];
                    for (const auto& it : *items) {
                        if (it.is_strand)
                            d.gaps[it.strand][lvl] = static_cast<int>(row.size());
                        else
                            row.push_back(it.leaf);
                    }
                }
                for (const auto& [lvl, row] : d.order)
                    for (vid v : row) d.level[v] = lvl;

                const int s1 = static_cast<int>(d.order.at(1).size());
                const int s3 = static_cast<int>(d.order.at(3).size());
                d.gaps[cut_l] = {{1, 0}, {2, 0}, {3, 0}};
                d.gaps[cut_r] = {{1, s1}, {2, k}, {3, s3}};
                for (const auto& cr : crosses) {
                    edge ce = mk_edge(cr.leaf, cr.far);
                    if (cr.upper)
                        d.gaps[ce] = cr.left ? std::map<int, int>{{2, 0}, {3, 0}}
                                             : std::map<int, int>{{2, k}, {3, s3}};
                    else
                        d.gaps[ce] = cr.left ? std::map<int, int>{{1, 0}, {2, 0}}
                                             : std::map<int, int>{{1, s1}, {2, k}};
                }
                normalize_levels(d);

                swlp_verdict sv = check_drawing_structure(d);
                if (!sv.ok) {
                    why = sv.failures.front();
                    continue;
                }
                swlp_verdict v = validate_swlp(d, 4);
                if (v.ok) return d;
                why = v.failures.front();
            }
        }
    }
    fail("ConstructionGap", "no feasible split of the boundary cycle: " + why);
}

level_drawing draw_outerplanar_caterpillar(const plane_graph& g) {
    two_outer_structure s = recognize_two_outer(g);
    if (s.kind == "cycle-caterpillar") return draw_cycle_caterpillar(s);
    if (s.kind != "outerplanar-caterpillar")
        fail("NotInFamily", "kind is " + s.kind);
    two_outer_structure st = triangulate_pockets(s);
    attachment_decomposition dec = decompose_attachments(st.graph);
    level_drawing cd = draw_cycle_caterpillar(dec.core);
    level_drawing d = glue_attachments(cd, dec.components, st.graph);
    swlp_verdict v = validate_swlp(d, 4);
    if (!v.ok) fail("ConstructionGap", v.failures.front());
    return d;
}

} // namespace elr
