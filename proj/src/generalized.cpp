#include <algorithm>
#include <set>

#include "elr/halin.hpp"

namespace elr {

namespace {

std::vector<vid> oriented_chain(const subdivision_record& rec, vid from, vid to) {
    auto it = rec.chains.find(mk_edge(from, to));
    if (it == rec.chains.end()) return {};
    std::vector<vid> c = it->second;
    if (from > to) std::reverse(c.begin(), c.end());
    return c;
}

// subdivided K4: one spoke chain per rim vertex, laid out over four levels with
// the rim labels swapped when only the middle chain is empty
level_drawing draw_k4_core(const plane_graph& g, const halin_structure& core,
                           const subdivision_record& rec) {
    vid hub = -1;
    for (vid v : core.graph.vertices)
        if (std::find(core.cycle.begin(), core.cycle.end(), v) == core.cycle.end())
            hub = v;
    vid r1 = core.cycle[0], r2 = core.cycle[1], r3 = core.cycle[2];
    std::vector<vid> x = oriented_chain(rec, r1, hub);
    std::vector<vid> y = oriented_chain(rec, r2, hub);
    std::vector<vid> z = oriented_chain(rec, r3, hub);
    if (z.empty() && !y.empty()) {
        std::swap(r2, r3);
        std::swap(y, z);
    }

    level_drawing d;
    auto put = [&](int lev, vid v) {
        d.order[lev].push_back(v);
        d.level[v] = lev;
    };
    put(0, r1);
    for (auto it = x.rbegin(); it != x.rend(); ++it) put(1, *it);
    put(1, r2);
    put(2, hub);
    for (auto it = y.rbegin(); it != y.rend(); ++it) put(2, *it);
    put(2, r3);
    for (auto it = z.rbegin(); it != z.rend(); ++it) put(3, *it);

    d.gaps[mk_edge(r1, r3)][1] = static_cast<int>(x.size()) + 1;
    if (x.empty()) d.gaps[mk_edge(r1, hub)][1] = 0;
    d.graph = g;
    return d;
}

} // namespace

level_drawing draw_generalized_halin(const plane_graph& g) {
    auto [core, rec] = recognize_generalized_halin(g);
    level_drawing d;
    if (core.is_k4) {
        d = draw_k4_core(g, core, rec);
    } else {
        level_drawing cd = draw_halin(core);
        d.graph = g;
        for (const auto& [l, row] : cd.order) d.order[2 * l] = row;
        for (const auto& [v, l] : cd.level) d.level[v] = 2 * l;

        // chains along level edges stay on that level, between their endpoints
        for (const auto& [e, chain] : rec.chains) {
            int la = d.level.at(e.first), lb = d.level.at(e.second);
            if (la != lb) continue;
            auto& row = d.order[la];
            int pa = d.pos(e.first), pb = d.pos(e.second);
            std::vector<vid> block = chain;
            if (pa > pb) {
                std::swap(pa, pb);
                std::reverse(block.begin(), block.end());
            }
            if (pb != pa + 1)
                fail("ConstructionGap", "level edge endpoints are not order-consecutive");
            row.insert(row.begin() + pa + 1, block.begin(), block.end());
            for (vid v : block) d.level[v] = la;
        }

        // between consecutive core levels: chains of falling edges become
        // blocks on the interposed level in planar order, unsubdivided falling
        // edges cross it through a recorded gap
        int hi = 0;
        for (const auto& [l, row] : cd.order) hi = std::max(hi, l);
        for (int l = 0; l < hi; ++l) {
            std::vector<edge> strip;
            for (const auto& e : cd.graph.edges) {
                int la = cd.level.at(e.first), lb = cd.level.at(e.second);
                if (std::min(la, lb) == l && std::max(la, lb) == l + 1)
                    strip.push_back(e);
            }
            auto upper = [&](const edge& e) {
                return cd.level.at(e.first) == l ? e.first : e.second;
            };
            auto lower = [&](const edge& e) {
                return cd.level.at(e.first) == l ? e.second : e.first;
            };
            std::sort(strip.begin(), strip.end(), [&](const edge& a, const edge& b) {
                return std::pair{d.pos(upper(a)), d.pos(lower(a))} <
                       std::pair{d.pos(upper(b)), d.pos(lower(b))};
            });
            auto& mid = d.order[2 * l + 1];
            for (const edge& e : strip) {
                std::vector<vid> block = oriented_chain(rec, upper(e), lower(e));
                if (block.empty()) {
                    d.gaps[e][2 * l + 1] = static_cast<int>(mid.size());
                } else {
                    for (vid v : block) {
                        mid.push_back(v);
                        d.level[v] = 2 * l + 1;
                    }
                }
            }
        }
    }

    auto structure = check_drawing_structure(d);
    if (!structure.ok) fail("ConstructionGap", structure.failures.front());
    auto verdict = validate_swlp(d, 2);
    if (!verdict.ok) fail("ConstructionGap", verdict.failures.front());
    return d;
}

} // namespace elr
