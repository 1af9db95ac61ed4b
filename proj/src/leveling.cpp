#include "elr/leveling.hpp"

#include <algorithm>
#include <sstream>

#include "elr/metrics.hpp"

namespace elr {

int level_drawing::pos(vid v) const {
    auto lit = level.find(v);
    if (lit == level.end()) fail("UnknownVertex", "no level for " + std::to_string(v));
    auto oit = order.find(lit->second);
    if (oit != order.end()) {
        const auto& row = oit->second;
        auto it = std::find(row.begin(), row.end(), v);
        if (it != row.end()) return static_cast<int>(it - row.begin());
    }
    fail("PreconditionViolated", "vertex " + std::to_string(v) + " missing from its row");
}

int edge_span(const level_drawing& d, const edge& e) {
    return std::abs(d.level.at(e.first) - d.level.at(e.second));
}

int max_span(const level_drawing& d) {
    int s = 0;
    for (const auto& e : d.graph.edges) s = std::max(s, edge_span(d, e));
    return s;
}

std::map<int, int> audit_span(const level_drawing& d) {
    std::map<int, int> h;
    for (const auto& e : d.graph.edges) h[edge_span(d, e)]++;
    return h;
}

namespace {

// make sure every level between min and max has a row entry (possibly empty)
void fill_rows(level_drawing& d) {
    if (d.level.empty()) return;
    int lo = d.level.begin()->second, hi = lo;
    for (const auto& [v, l] : d.level) {
        (void)v;
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    for (int l = lo; l <= hi; ++l) d.order.try_emplace(l);
}

std::string edge_name(const edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

swlp_verdict check_drawing_structure(const level_drawing& d) {
    swlp_verdict v;
    auto bad = [&](const std::string& msg) {
        v.ok = false;
        v.failures.push_back(msg);
    };

    for (vid x : d.graph.vertices)
        if (!d.level.count(x)) bad("vertex " + std::to_string(x) + " has no level");
    for (const auto& [x, l] : d.level) {
        (void)l;
        if (!d.graph.has_vertex(x)) bad("level entry for unknown vertex " + std::to_string(x));
    }
    if (!v.ok) return v;

    int lo = d.level.begin()->second, hi = lo;
    for (const auto& [x, l] : d.level) {
        (void)x;
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    for (int l = lo; l <= hi; ++l)
        if (!d.order.count(l)) bad("missing row for level " + std::to_string(l));
    for (const auto& [l, row] : d.order) {
        if (l < lo || l > hi)
            if (!row.empty()) bad("row outside level range: " + std::to_string(l));
        for (vid x : row)
            if (!d.level.count(x) || d.level.at(x) != l)
                bad("vertex " + std::to_string(x) + " listed on wrong row " + std::to_string(l));
    }
    std::size_t listed = 0;
    for (const auto& [l, row] : d.order) {
        (void)l;
        listed += row.size();
        std::set<vid> seen(row.begin(), row.end());
        if (seen.size() != row.size()) bad("duplicate vertex in row " + std::to_string(l));
    }
    if (listed != d.graph.n()) bad("rows do not partition the vertex set");
    if (!v.ok) return v;

    for (const auto& e : d.graph.edges) {
        int s = edge_span(d, e);
        if (s == 0) {
            if (std::abs(d.pos(e.first) - d.pos(e.second)) != 1)
                bad("span-0 edge " + edge_name(e) + " not order-consecutive");
            if (d.gaps.count(e)) bad("span-0 edge " + edge_name(e) + " carries gap records");
        } else if (s == 1) {
            if (d.gaps.count(e)) bad("span-1 edge " + edge_name(e) + " carries gap records");
        } else {
            auto git = d.gaps.find(e);
            if (git == d.gaps.end()) {
                bad("long edge " + edge_name(e) + " has no gap records");
                continue;
            }
            int a = std::min(d.level.at(e.first), d.level.at(e.second));
            int b = std::max(d.level.at(e.first), d.level.at(e.second));
            for (int l = a + 1; l < b; ++l) {
                auto pit = git->second.find(l);
                if (pit == git->second.end()) {
                    bad("long edge " + edge_name(e) + " missing gap at level " + std::to_string(l));
                    continue;
                }
                int p = pit->second;
                int sz = static_cast<int>(d.order.at(l).size());
                if (p < 0 || p > sz)
                    bad("gap position " + std::to_string(p) + " out of range on level " +
                        std::to_string(l) + " for " + edge_name(e));
            }
            for (const auto& [l, p] : git->second) {
                (void)p;
                if (l <= a || l >= b)
                    bad("gap at non-crossed level " + std::to_string(l) + " for " + edge_name(e));
            }
        }
    }
    return v;
}

swlp_verdict validate_swlp(const level_drawing& d, int k) {
    swlp_verdict v = check_drawing_structure(d);
    if (!v.ok) return v;
    for (const auto& e : d.graph.edges) {
        int s = edge_span(d, e);
        if (s > k)
            v.failures.push_back("edge " + edge_name(e) + " has span " + std::to_string(s) +
                                 " > " + std::to_string(k));
    }
    if (!v.failures.empty()) {
        v.ok = false;
        return v;
    }
    straight_line_drawing sl;
    try {
        sl = realize_straight_line(d, rat(1, 100));
    } catch (const elr_error& e) {
        v.ok = false;
        v.failures.push_back(std::string("realization failed: ") + e.what());
        return v;
    }
    planarity_verdict pv = check_planar_straight_line(sl);
    if (!pv.planar) {
        v.ok = false;
        for (const auto& viol : pv.violations)
            v.failures.push_back("planarity: " + viol.kind + " between " + edge_name(viol.e1) +
                                 " and " + edge_name(viol.e2));
    }
    return v;
}

level_drawing double_levels(const level_drawing& d) {
    swlp_verdict sv = check_drawing_structure(d);
    if (!sv.ok) fail("PreconditionViolated", "invalid drawing: " + sv.failures.front());

    level_drawing out;
    out.graph = d.graph;
    for (const auto& [l, row] : d.order) {
        for (std::size_t p = 0; p < row.size(); ++p) {
            int nl = 2 * l + static_cast<int>(p % 2);
            out.level[row[p]] = nl;
            out.order[nl].push_back(row[p]);
        }
    }
    fill_rows(out);

    // rebuild gap records: positions among the even/odd halves of old rows
    for (const auto& e : d.graph.edges) {
        vid u = e.first, v = e.second;
        if (out.level.at(u) > out.level.at(v)) std::swap(u, v); // u above
        int lu = out.level.at(u), lv = out.level.at(v);
        if (lv - lu < 2) continue;
        std::map<int, int> rec;
        for (int nl = lu + 1; nl < lv; ++nl) {
            bool odd_half = ((nl % 2) + 2) % 2 == 1;
            int old_level = (nl - (odd_half ? 1 : 0)) / 2;
            int old_u = d.level.at(u), old_v = d.level.at(v);
            int g;
            if (old_level == old_u) {
                // sibling row of an endpoint: position among the other parity
                int p = d.pos(u);
                g = odd_half ? p / 2 : (p + 1) / 2;
            } else if (old_level == old_v) {
                int p = d.pos(v);
                g = odd_half ? p / 2 : (p + 1) / 2;
            } else {
                int old_gap = d.gaps.at(e).at(old_level);
                g = odd_half ? old_gap / 2 : (old_gap + 1) / 2;
            }
            rec[nl] = g;
        }
        out.gaps[e] = std::move(rec);
    }
    return out;
}

level_drawing mirror(const level_drawing& d, bool horizontal, bool vertical) {
    level_drawing out;
    out.graph = d.graph;
    int lo = 0, hi = 0;
    if (!d.level.empty()) {
        lo = hi = d.level.begin()->second;
        for (const auto& [v, l] : d.level) {
            (void)v;
            lo = std::min(lo, l);
            hi = std::max(hi, l);
        }
    }
    auto map_level = [&](int l) { return vertical ? lo + hi - l : l; };
    for (const auto& [v, l] : d.level) out.level[v] = map_level(l);
    for (const auto& [l, row] : d.order) {
        std::vector<vid> r = row;
        if (horizontal) std::reverse(r.begin(), r.end());
        out.order[map_level(l)] = std::move(r);
    }
    for (const auto& [e, rec] : d.gaps) {
        std::map<int, int> nr;
        for (const auto& [l, p] : rec) {
            int np = horizontal ? static_cast<int>(d.order.at(l).size()) - p : p;
            nr[map_level(l)] = np;
        }
        out.gaps[e] = std::move(nr);
    }
    return out;
}

level_drawing insert_empty_levels(const level_drawing& d, int after_level, int count) {
    if (count < 0) fail("PreconditionViolated", "negative level count");
    level_drawing out;
    out.graph = d.graph;
    auto shift = [&](int l) { return l > after_level ? l + count : l; };
    for (const auto& [v, l] : d.level) out.level[v] = shift(l);
    for (const auto& [l, row] : d.order) out.order[shift(l)] = row;
    fill_rows(out);
    for (const auto& [e, rec] : d.gaps) {
        std::map<int, int> nr;
        for (const auto& [l, p] : rec) nr[shift(l)] = p;
        out.gaps[e] = std::move(nr);
    }
    // edges now crossing the fresh empty band need gap entries there, and any
    // edge whose span grew past 1 needs records on all its crossed levels
    for (const auto& e : d.graph.edges) {
        int a = std::min(out.level.at(e.first), out.level.at(e.second));
        int b = std::max(out.level.at(e.first), out.level.at(e.second));
        if (b - a < 2) continue;
        auto& rec = out.gaps[e];
        for (int l = a + 1; l < b; ++l)
            if (!rec.count(l)) {
                if (!out.order.at(l).empty())
                    fail("PreconditionViolated",
                         "edge " + edge_name(e) + " crosses populated level " +
                             std::to_string(l) + " without a gap record");
                rec[l] = 0;
            }
    }
    return out;
}

level_drawing stack(const level_drawing& top, const level_drawing& bottom,
                    const std::vector<edge>& seam_edges, int gap_levels) {
    for (const auto& [v, l] : bottom.level) {
        (void)l;
        if (top.level.count(v))
            fail("PreconditionViolated", "stacked drawings share vertex " + std::to_string(v));
    }
    int top_hi = top.level.begin()->second, bot_lo = bottom.level.begin()->second;
    for (const auto& [v, l] : top.level) {
        (void)v;
        top_hi = std::max(top_hi, l);
    }
    for (const auto& [v, l] : bottom.level) {
        (void)v;
        bot_lo = std::min(bot_lo, l);
    }
    const int shift = top_hi + 1 + gap_levels - bot_lo;

    level_drawing out;
    // merged working graph: union plus seams (rotations merged piecewise; the
    // caller of an assembly pipeline restores the true embedded graph at the end)
    out.graph.vertices = top.graph.vertices;
    out.graph.vertices.insert(out.graph.vertices.end(), bottom.graph.vertices.begin(),
                              bottom.graph.vertices.end());
    std::sort(out.graph.vertices.begin(), out.graph.vertices.end());
    out.graph.edges = top.graph.edges;
    out.graph.edges.insert(out.graph.edges.end(), bottom.graph.edges.begin(),
                           bottom.graph.edges.end());
    for (const auto& e : seam_edges) out.graph.edges.push_back(mk_edge(e.first, e.second));
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    out.graph.edges.erase(std::unique(out.graph.edges.begin(), out.graph.edges.end()),
                          out.graph.edges.end());
    out.graph.rotation = top.graph.rotation;
    out.graph.rotation.insert(bottom.graph.rotation.begin(), bottom.graph.rotation.end());

    out.level = top.level;
    for (const auto& [v, l] : bottom.level) out.level[v] = l + shift;
    for (const auto& [l, row] : top.order) out.order[l] = row;
    for (const auto& [l, row] : bottom.order) out.order[l + shift] = row;
    fill_rows(out);
    out.gaps = top.gaps;
    for (const auto& [e, rec] : bottom.gaps) {
        std::map<int, int> nr;
        for (const auto& [l, p] : rec) nr[l + shift] = p;
        out.gaps[e] = std::move(nr);
    }

    // seams must join the adjacent boundary rows without inversions
    std::vector<std::pair<int, int>> spans;
    for (const auto& e : seam_edges) {
        vid a = e.first, b = e.second;
        if (!top.level.count(a)) std::swap(a, b);
        if (!top.level.count(a) || !bottom.level.count(b))
            fail("PreconditionViolated", "seam edge " + edge_name(e) + " not across the seam");
        if (top.level.at(a) != top_hi || bottom.level.at(b) != bot_lo)
            fail("PreconditionViolated",
                 "seam edge " + edge_name(e) + " endpoints not on the boundary rows");
        spans.push_back({top.pos(a), bottom.pos(b)});
        if (gap_levels > 0) {
            auto& rec = out.gaps[mk_edge(a, b)];
            for (int l = top_hi + 1; l < bot_lo + shift; ++l) rec[l] = 0;
        }
    }
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j) {
            long long dx = spans[i].first - spans[j].first;
            long long dy = spans[i].second - spans[j].second;
            if (dx * dy < 0)
                fail("SeamCrossing", "seam edges " + edge_name(seam_edges[i]) + " and " +
                                         edge_name(seam_edges[j]) + " cross");
        }
    return out;
}

namespace {

// occurrences of (a,b) or (b,a) as consecutive outer-walk pairs
bool on_outer_walk(const plane_graph& g, vid a, vid b) {
    const auto& w = g.outer_face;
    for (std::size_t i = 0; i < w.size(); ++i) {
        vid x = w[i], y = w[(i + 1) % w.size()];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

} // namespace

level_drawing outerplanar_1swlp(const plane_graph& g, anchor_mode mode, edge anchor) {
    std::set<vid> on_outer(g.outer_face.begin(), g.outer_face.end());
    if (on_outer.size() != g.n())
        fail("NotOuterplanar", "some vertex is not on the outer boundary");
    // the anchor keeps its caller-given orientation: anchor.first is the
    // endpoint that ends up on top (edge_leftmost) or leftmost (edge_on_top)
    edge key = mk_edge(anchor.first, anchor.second);
    if (!g.has_edge(key.first, key.second))
        fail("PreconditionViolated", "anchor " + edge_name(key) + " is not an edge");
    if (!on_outer_walk(g, key.first, key.second))
        fail("PreconditionViolated", "anchor " + edge_name(key) + " not on the outer walk");

    // BFS root: a dummy vertex outside the anchor edge (edge_on_top) or the
    // anchor's first endpoint (edge_leftmost)
    plane_graph work = g;
    vid root;
    vid dummy = -1;
    if (mode == anchor_mode::edge_on_top) {
        dummy = g.vertices.back() + 1;
        root = dummy;
        vid u = anchor.first, v = anchor.second;
        work.vertices.push_back(dummy);
        work.edges.push_back(mk_edge(dummy, u));
        work.edges.push_back(mk_edge(dummy, v));
        std::sort(work.edges.begin(), work.edges.end());
        // embed the dummy in the outer face over the anchor edge
        std::vector<vid> nw;
        bool spliced = false;
        const auto& ow = g.outer_face;
        for (std::size_t i = 0; i < ow.size(); ++i) {
            vid x = ow[i], y = ow[(i + 1) % ow.size()];
            nw.push_back(x);
            if (!spliced && ((x == u && y == v) || (x == v && y == u))) {
                nw.push_back(dummy);
                work.rotation[dummy] = {y, x};
                spliced = true;
            }
        }
        // walk with dummy spliced in (only used for ordering below)
        work.outer_face = nw;
    } else {
        root = anchor.first;
    }

    // order along the outer walk starting at the root, direction chosen so the
    // anchor's other endpoint comes as early as possible
    const auto& walk = work.outer_face;
    std::vector<vid> fwd, rev;
    std::size_t start = 0;
    while (start < walk.size() && walk[start] != root) ++start;
    if (start == walk.size()) fail("PreconditionViolated", "root missing from outer walk");
    for (std::size_t i = 0; i < walk.size(); ++i) fwd.push_back(walk[(start + i) % walk.size()]);
    rev.push_back(root);
    for (std::size_t i = walk.size(); i > 1; --i)
        rev.push_back(walk[(start + i - 1) % walk.size()]);
    vid want_second = mode == anchor_mode::edge_on_top ? anchor.first : anchor.second;
    const std::vector<vid>& ord_walk = (std::find(fwd.begin(), fwd.end(), want_second) -
                                            fwd.begin() <=
                                        std::find(rev.begin(), rev.end(), want_second) -
                                            rev.begin())
                                           ? fwd
                                           : rev;
    std::map<vid, int> ord;
    for (std::size_t i = 0; i < ord_walk.size(); ++i)
        ord.try_emplace(ord_walk[i], static_cast<int>(i));

    // breadth-first levels from the root
    std::map<vid, int> dist;
    dist[root] = 0;
    std::vector<vid> frontier = {root};
    while (!frontier.empty()) {
        std::vector<vid> next;
        for (vid v : frontier)
            for (vid w : work.neighbors(v))
                if (!dist.count(w)) {
                    dist[w] = dist[v] + 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }

    level_drawing d;
    d.graph = g;
    for (vid v : g.vertices) {
        int l = dist.at(v) - (mode == anchor_mode::edge_on_top ? 1 : 0);
        d.level[v] = l;
        d.order[l].push_back(v);
    }
    for (auto& [l, row] : d.order) {
        (void)l;
        std::sort(row.begin(), row.end(), [&](vid a, vid b) { return ord.at(a) < ord.at(b); });
    }
    fill_rows(d);
    (void)dummy;
    return d;
}

void normalize_levels(level_drawing& d) {
    if (d.level.empty()) return;
    int lo = d.level.begin()->second;
    for (const auto& [v, l] : d.level) {
        (void)v;
        lo = std::min(lo, l);
    }
    if (lo == 0) {
        fill_rows(d);
        return;
    }
    level_drawing out;
    out.graph = std::move(d.graph);
    for (const auto& [v, l] : d.level) out.level[v] = l - lo;
    for (const auto& [l, row] : d.order) out.order[l - lo] = row;
    for (const auto& [e, rec] : d.gaps) {
        std::map<int, int> nr;
        for (const auto& [l, p] : rec) nr[l - lo] = p;
        out.gaps[e] = std::move(nr);
    }
    fill_rows(out);
    d = std::move(out);
}

} // namespace elr
