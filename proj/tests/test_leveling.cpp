#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elr/leveling.hpp"
#include "elr/metrics.hpp"

using namespace elr;

namespace {

plane_graph bare(std::vector<vid> vs, std::vector<edge> es) {
    plane_graph g;
    g.vertices = std::move(vs);
    std::sort(g.vertices.begin(), g.vertices.end());
    for (auto& e : es) e = mk_edge(e.first, e.second);
    std::sort(es.begin(), es.end());
    g.edges = std::move(es);
    for (vid v : g.vertices) g.rotation[v] = {};
    for (const auto& e : g.edges) {
        g.rotation[e.first].push_back(e.second);
        g.rotation[e.second].push_back(e.first);
    }
    return g;
}

// rows: {level -> vertex list}, gaps: {edge -> {level -> position}}
level_drawing make_drawing(plane_graph g, std::map<int, std::vector<vid>> rows,
                           std::map<edge, std::map<int, int>> gaps = {}) {
    level_drawing d;
    d.graph = std::move(g);
    for (const auto& [l, row] : rows) {
        for (vid v : row) d.level[v] = l;
        d.order[l] = row;
    }
    d.gaps = std::move(gaps);
    return d;
}

// 1: level 0 left, 2: level 0 right, 3: level 1, 4: level 2
level_drawing sample() {
    auto g = bare({1, 2, 3, 4}, {{1, 2}, {1, 3}, {3, 4}, {2, 4}});
    return make_drawing(g, {{0, {1, 2}}, {1, {3}}, {2, {4}}}, {{mk_edge(2, 4), {{1, 1}}}});
}

rat len2(const straight_line_drawing& sl, const edge& e) {
    return dist2(sl.coords.at(e.first), sl.coords.at(e.second));
}

plane_graph fan5() {
    std::map<vid, point> c;
    c[0] = {rat(0), rat(0)};
    c[1] = {rat(-4), rat(2)};
    c[2] = {rat(-2), rat(3)};
    c[3] = {rat(0), rat(4)};
    c[4] = {rat(2), rat(3)};
    c[5] = {rat(4), rat(2)};
    std::vector<edge> es = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                            {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    return plane_graph_from_coords({0, 1, 2, 3, 4, 5}, es, c);
}

} // namespace

TEST_CASE("span bookkeeping") {
    auto d = sample();
    CHECK(edge_span(d, mk_edge(1, 2)) == 0);
    CHECK(edge_span(d, mk_edge(1, 3)) == 1);
    CHECK(edge_span(d, mk_edge(2, 4)) == 2);
    CHECK(max_span(d) == 2);
    auto h = audit_span(d);
    CHECK(h[0] == 1);
    CHECK(h[1] == 2);
    CHECK(h[2] == 1);
    CHECK(d.pos(2) == 1);
    CHECK(bool(check_drawing_structure(d)));
}

TEST_CASE("structure violations are reported") {
    auto g = bare({1, 2, 3}, {{1, 2}});
    auto spread = make_drawing(g, {{0, {1, 3, 2}}});
    auto v = check_drawing_structure(spread);
    CHECK(!v.ok);
    CHECK(v.failures.front().find("not order-consecutive") != std::string::npos);

    auto d = sample();
    d.gaps.clear(); // long edge loses its record
    CHECK(!check_drawing_structure(d));

    d = sample();
    d.gaps[mk_edge(2, 4)][0] = 0; // level 0 is not strictly crossed
    CHECK(!check_drawing_structure(d));

    d = sample();
    d.gaps[mk_edge(2, 4)][1] = 5; // out of range on a 1-vertex row
    CHECK(!check_drawing_structure(d));
}

TEST_CASE("validate_swlp enforces the span budget") {
    auto d = sample();
    CHECK(bool(validate_swlp(d, 2)));
    auto v = validate_swlp(d, 1);
    CHECK(!v.ok);
    CHECK(v.failures.front().find("span 2") != std::string::npos);
}

TEST_CASE("realization brackets every edge length by its span") {
    auto d = sample();
    rat eps(1, 100);
    auto sl = realize_straight_line(d, eps);
    for (const auto& e : d.graph.edges) {
        rat l2 = len2(sl, e);
        rat s(edge_span(d, e));
        CHECK(l2 >= s * s);
        CHECK(l2 <= s * s + eps * eps);
    }
    CHECK(bool(check_planar_straight_line(sl)));
    // width is exactly epsilon
    rat lo = sl.coords.at(1).x, hi = lo;
    for (const auto& [v, p] : sl.coords) {
        (void)v;
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    CHECK(hi - lo == eps);
}

TEST_CASE("contradictory gap records are infeasible") {
    auto g = bare({0, 2, 4, 5}, {{0, 4}, {0, 5}, {4, 5}});
    auto d = make_drawing(g, {{0, {0}}, {1, {2}}, {2, {4, 5}}},
                          {{mk_edge(0, 4), {{1, 1}}}, {mk_edge(0, 5), {{1, 0}}}});
    CHECK(bool(check_drawing_structure(d)));
    CHECK_THROWS_WITH_AS(realize_straight_line(d, rat(1, 100)),
                         doctest::Contains("InfeasibleGaps"), elr_error);
}

TEST_CASE("doubling yields a proper drawing of bounded span") {
    auto d = sample();
    auto dd = double_levels(d);
    CHECK(bool(check_drawing_structure(dd)));
    auto h = audit_span(dd);
    CHECK(h[0] == 0);
    for (const auto& e : d.graph.edges)
        CHECK(edge_span(dd, e) <= 2 * edge_span(d, e) + 1);
    // old span-0 edge becomes span 1 across the split pair
    CHECK(edge_span(dd, mk_edge(1, 2)) == 1);
    CHECK(dd.level.at(1) == 0);
    CHECK(dd.level.at(2) == 1);
    // gap positions follow the parity split
    CHECK(edge_span(dd, mk_edge(1, 3)) == 2);
    CHECK(dd.gaps.at(mk_edge(1, 3)).at(1) == 0);
    CHECK(edge_span(dd, mk_edge(2, 4)) == 3);
    CHECK(dd.gaps.at(mk_edge(2, 4)).at(2) == 1);
    CHECK(dd.gaps.at(mk_edge(2, 4)).at(3) == 0);
    CHECK(bool(validate_swlp(dd, 3)));
}

TEST_CASE("mirroring is an involution and preserves validity") {
    auto d = sample();
    for (bool h : {true, false})
        for (bool v : {true, false}) {
            auto m = mirror(d, h, v);
            CHECK(bool(check_drawing_structure(m)));
            auto back = mirror(m, h, v);
            CHECK(back.level == d.level);
            CHECK(back.order == d.order);
            CHECK(back.gaps == d.gaps);
        }
    auto m = mirror(d, true, false);
    CHECK(m.order.at(0) == std::vector<vid>{2, 1});
    CHECK(m.gaps.at(mk_edge(2, 4)).at(1) == 0);
    auto mv = mirror(d, false, true);
    CHECK(mv.level.at(4) == 0);
    CHECK(mv.level.at(1) == 2);
}

TEST_CASE("inserting empty levels stretches crossing edges") {
    auto d = sample();
    auto e = insert_empty_levels(d, 0, 2);
    CHECK(bool(check_drawing_structure(e)));
    CHECK(e.level.at(3) == 3);
    CHECK(e.level.at(4) == 4);
    CHECK(e.order.at(1).empty());
    CHECK(e.order.at(2).empty());
    CHECK(e.gaps.at(mk_edge(1, 3)).at(1) == 0);
    CHECK(e.gaps.at(mk_edge(2, 4)).at(3) == 1); // old record kept, shifted
    CHECK(bool(validate_swlp(e, 4)));
}

TEST_CASE("stacking joins boundary rows by seams") {
    auto top = make_drawing(bare({1, 2}, {{1, 2}}), {{0, {1, 2}}});
    auto bot = make_drawing(bare({3, 4}, {{3, 4}}), {{0, {3, 4}}});
    auto s = stack(top, bot, {mk_edge(1, 3), mk_edge(2, 4)});
    CHECK(bool(check_drawing_structure(s)));
    CHECK(s.level.at(3) == 1);
    CHECK(edge_span(s, mk_edge(1, 3)) == 1);
    CHECK(bool(validate_swlp(s, 1)));

    auto wide = stack(top, bot, {mk_edge(1, 3)}, 2);
    CHECK(wide.level.at(3) == 3);
    CHECK(wide.gaps.at(mk_edge(1, 3)).size() == 2);
    CHECK(bool(validate_swlp(wide, 3)));

    CHECK_THROWS_WITH_AS(stack(top, bot, {mk_edge(1, 4), mk_edge(2, 3)}),
                         doctest::Contains("SeamCrossing"), elr_error);
    CHECK_THROWS_WITH_AS(stack(top, top, {}), doctest::Contains("PreconditionViolated"),
                         elr_error);
}

TEST_CASE("outerplanar layering anchors an edge on top") {
    auto g = fan5();
    auto d = outerplanar_1swlp(g, anchor_mode::edge_on_top, mk_edge(0, 1));
    CHECK(d.order.at(0) == std::vector<vid>{0, 1});
    CHECK(max_span(d) <= 1);
    CHECK(bool(validate_swlp(d, 1)));
    CHECK(d.graph.n() == 6); // dummy removed

    auto d2 = outerplanar_1swlp(g, anchor_mode::edge_on_top, mk_edge(4, 5));
    CHECK(d2.order.at(0) == std::vector<vid>{4, 5});
    CHECK(bool(validate_swlp(d2, 1)));
}

TEST_CASE("outerplanar layering anchors a vertex leftmost") {
    auto g = fan5();
    auto d = outerplanar_1swlp(g, anchor_mode::edge_leftmost, mk_edge(0, 1));
    CHECK(d.order.at(0) == std::vector<vid>{0});
    CHECK(d.order.at(1).front() == 1);
    CHECK(max_span(d) <= 1);
    CHECK(bool(validate_swlp(d, 1)));

    auto d2 = outerplanar_1swlp(g, anchor_mode::edge_leftmost, mk_edge(5, 4));
    CHECK(d2.order.at(0) == std::vector<vid>{4});
    CHECK(d2.order.at(1).front() == 5);
    CHECK(bool(validate_swlp(d2, 1)));
}

TEST_CASE("outerplanar layering rejects bad inputs") {
    std::map<vid, point> c;
    c[0] = {rat(0), rat(0)};
    c[1] = {rat(4), rat(0)};
    c[2] = {rat(2), rat(3)};
    c[3] = {rat(2), rat(1)};
    auto k4 = plane_graph_from_coords({0, 1, 2, 3},
                                      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, c);
    CHECK_THROWS_WITH_AS(outerplanar_1swlp(k4, anchor_mode::edge_on_top, mk_edge(0, 1)),
                         doctest::Contains("NotOuterplanar"), elr_error);
    auto g = fan5();
    CHECK_THROWS_WITH_AS(outerplanar_1swlp(g, anchor_mode::edge_on_top, mk_edge(1, 5)),
                         doctest::Contains("PreconditionViolated"), elr_error);
}

TEST_CASE("level normalization shifts the range to zero") {
    auto d = sample();
    auto m = mirror(d, false, true);
    for (auto& [v, l] : m.level) {
        (void)v;
        l -= 7;
    }
    std::map<int, std::vector<vid>> rows;
    for (const auto& [l, row] : m.order) rows[l - 7] = row;
    m.order = rows;
    std::map<edge, std::map<int, int>> gs;
    for (const auto& [e, rec] : m.gaps) {
        for (const auto& [l, p] : rec) gs[e][l - 7] = p;
    }
    m.gaps = gs;
    normalize_levels(m);
    CHECK(m.level.at(4) == 0);
    CHECK(m.order.count(0) == 1);
    CHECK(bool(check_drawing_structure(m)));
}
