#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elr/plane_graph.hpp"

using namespace elr;

static point pt(int x, int y) { return point{rat(x), rat(y)}; }

static plane_graph triangle() {
    return plane_graph_from_coords({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}},
                                   {{1, pt(0, 0)}, {2, pt(4, 0)}, {3, pt(2, 3)}});
}

static plane_graph k4() {
    return plane_graph_from_coords({0, 1, 2, 3},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                                   {{0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(2, 3)}, {3, pt(2, 1)}});
}

TEST_CASE("triangle embeds with two triangular faces") {
    plane_graph g = triangle();
    face_set fs = extract_faces(g);
    REQUIRE(fs.faces.size() == 2);
    CHECK(fs.faces[0].size() == 3);
    CHECK(fs.faces[1].size() == 3);
    CHECK(fs.outer_index >= 0);
    // outer walk is clockwise in coordinates
    std::vector<point> poly;
    for (vid v : g.outer_face)
        poly.push_back(v == 1 ? pt(0, 0) : v == 2 ? pt(4, 0) : pt(2, 3));
    CHECK(polygon_area2(poly) < 0);
}

TEST_CASE("K4 embeds with four triangular faces") {
    plane_graph g = k4();
    face_set fs = extract_faces(g);
    REQUIRE(fs.faces.size() == 4);
    for (const auto& f : fs.faces) CHECK(f.size() == 3);
    CHECK(same_cyclic_sequence(g.outer_face, {0, 2, 1}));
}

TEST_CASE("four-cycle has two quadrilateral faces") {
    plane_graph g = plane_graph_from_coords(
        {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
        {{0, pt(0, 0)}, {1, pt(2, 0)}, {2, pt(2, 2)}, {3, pt(0, 2)}});
    face_set fs = extract_faces(g);
    REQUIRE(fs.faces.size() == 2);
    CHECK(fs.faces[0].size() == 4);
    CHECK(fs.faces[1].size() == 4);
}

TEST_CASE("single edge traces one face through both sides") {
    plane_graph g = plane_graph_from_coords({5, 9}, {{5, 9}},
                                            {{5, pt(0, 0)}, {9, pt(1, 0)}});
    face_set fs = extract_faces(g);
    REQUIRE(fs.faces.size() == 1);
    CHECK(fs.faces[0].size() == 2);
}

TEST_CASE("asymmetric rotation is rejected") {
    plane_graph g = triangle();
    g.rotation[1] = {2}; // drops neighbor 3
    CHECK_THROWS_WITH_AS(validate_graph(g), doctest::Contains("InconsistentRotation"),
                         elr_error);
}

TEST_CASE("non-planar rotation system fails the Euler check") {
    // K5 admits no planar embedding, so every rotation system fails
    std::vector<vid> vs = {0, 1, 2, 3, 4};
    plane_graph g;
    g.vertices = vs;
    for (vid u : vs)
        for (vid v : vs)
            if (u < v) g.edges.push_back({u, v});
    for (vid u : vs) {
        std::vector<vid> rot;
        for (vid v : vs)
            if (v != u) rot.push_back(v);
        g.rotation[u] = rot;
    }
    g.outer_face = {0, 1, 2};
    CHECK_THROWS_WITH_AS(validate_graph(g), doctest::Contains("NotPlanarEmbedding"),
                         elr_error);
}

TEST_CASE("wrong outer walk is rejected") {
    plane_graph g = triangle();
    g.outer_face = {1, 2, 3};
    bool ok = same_cyclic_sequence(g.outer_face, extract_faces(g).faces[0]) ||
              same_cyclic_sequence(g.outer_face, extract_faces(g).faces[1]);
    if (!ok) CHECK_THROWS_AS(validate_graph(g), elr_error);
}

TEST_CASE("smoothing a path vertex inside a four-cycle adds the chord") {
    // square 0,1,2,3 with path 0 - 9 - 2 inside
    plane_graph g = plane_graph_from_coords(
        {0, 1, 2, 3, 9}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 9}, {2, 9}},
        {{0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(4, 4)}, {3, pt(0, 4)}, {9, pt(2, 2)}});
    plane_graph s = smooth_vertex(g, 9);
    validate_graph(s);
    CHECK(s.n() == 4);
    CHECK(s.has_edge(0, 2));
    CHECK_FALSE(s.has_vertex(9));
    // chord inherits the rotation slot vacated by the path
    const auto& rot0 = s.neighbors(0);
    CHECK(std::count(rot0.begin(), rot0.end(), 2) == 1);
}

TEST_CASE("smoothing rejects wrong degree and multi-edges") {
    plane_graph g = k4();
    CHECK_THROWS_WITH_AS(smooth_vertex(g, 0), doctest::Contains("DegreeNotTwo"), elr_error);

    // triangle: every vertex has degree 2 but smoothing closes a multi-edge
    plane_graph t = triangle();
    CHECK_THROWS_WITH_AS(smooth_vertex(t, 1), doctest::Contains("WouldCreateMultiEdge"),
                         elr_error);
}

TEST_CASE("subdividing a K4 spoke once adds a degree-2 vertex") {
    plane_graph g = k4();
    std::vector<vid> fresh;
    plane_graph s = subdivide_edge(g, {0, 3}, 1, &fresh);
    validate_graph(s);
    REQUIRE(fresh.size() == 1);
    CHECK(s.n() == 5);
    CHECK(s.degree(fresh[0]) == 2);
    CHECK_FALSE(s.has_edge(0, 3));
    CHECK(s.has_edge(0, fresh[0]));
    CHECK(s.has_edge(fresh[0], 3));
}

TEST_CASE("subdivision count zero is rejected") {
    plane_graph g = k4();
    CHECK_THROWS_AS(subdivide_edge(g, {0, 3}, 0, nullptr), elr_error);
    CHECK_THROWS_WITH_AS(subdivide_edge(g, {0, 5}, 1, nullptr),
                         doctest::Contains("UnknownEdge"), elr_error);
}

TEST_CASE("subdivide then smooth returns the original graph") {
    plane_graph g = k4();
    std::vector<vid> fresh;
    plane_graph s = subdivide_edge(g, {1, 2}, 3, &fresh);
    validate_graph(s);
    plane_graph back = s;
    for (vid v : fresh) back = smooth_vertex(back, v);
    canonicalize(back);
    plane_graph want = g;
    canonicalize(want);
    CHECK(back.vertices == want.vertices);
    CHECK(back.edges == want.edges);
    CHECK(back.rotation == want.rotation);
    CHECK(same_cyclic_sequence(back.outer_face, want.outer_face));
}

TEST_CASE("subdividing an outer edge extends the outer walk") {
    plane_graph g = triangle();
    std::vector<vid> fresh;
    plane_graph s = subdivide_edge(g, {1, 2}, 2, &fresh);
    validate_graph(s);
    CHECK(s.outer_face.size() == 5);
}

TEST_CASE("classification of a wheel: hub inner, spokes mixed, rim outer") {
    // hub 0 with rim 1..5
    std::vector<vid> vs = {0, 1, 2, 3, 4, 5};
    std::vector<edge> es;
    std::map<vid, point> pos;
    pos[0] = pt(0, 0);
    std::vector<point> rim = {pt(3, 0), pt(1, 3), pt(-3, 1), pt(-3, -1), pt(1, -3)};
    for (int i = 1; i <= 5; ++i) {
        es.push_back({0, i});
        es.push_back({i, i % 5 + 1});
        pos[i] = rim[static_cast<std::size_t>(i - 1)];
    }
    plane_graph g = plane_graph_from_coords(vs, es, pos);
    vertex_classes c = classify_vertices(g);
    CHECK(c.inner_vertices == std::set<vid>{0});
    CHECK(c.outer_vertices.size() == 5);
    for (int i = 1; i <= 5; ++i) {
        CHECK(c.edge_kind.at(mk_edge(0, i)) == edge_class::mixed);
        CHECK(c.edge_kind.at(mk_edge(i, i % 5 + 1)) == edge_class::outer);
    }
}

TEST_CASE("building from faces matches building from coordinates") {
    plane_graph a = triangle();
    face_set fs = extract_faces(a);
    plane_graph b = plane_graph_from_faces(fs.faces, fs.outer_index);
    canonicalize(a);
    canonicalize(b);
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
    CHECK(a.rotation == b.rotation);
    CHECK(a.outer_face == b.outer_face);
}

TEST_CASE("face builder round-trips K4") {
    plane_graph a = k4();
    face_set fs = extract_faces(a);
    plane_graph b = plane_graph_from_faces(fs.faces, fs.outer_index);
    canonicalize(a);
    canonicalize(b);
    CHECK(a.rotation == b.rotation);
    CHECK(a.outer_face == b.outer_face);
}

TEST_CASE("canonical form starts rotations at the smallest neighbor") {
    plane_graph g = k4();
    canonicalize(g);
    for (const auto& [v, rot] : g.rotation) {
        (void)v;
        CHECK(*std::min_element(rot.begin(), rot.end()) == rot.front());
    }
}
