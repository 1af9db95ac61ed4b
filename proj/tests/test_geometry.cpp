#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "elr/error.hpp"
#include "elr/geometry.hpp"

using namespace elr;

static point pt(int x, int y) { return point{rat(x), rat(y)}; }

TEST_CASE("rational parsing accepts integers, fractions and decimals") {
    CHECK(parse_rat("7") == rat(7));
    CHECK(parse_rat("-3") == rat(-3));
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-6/8") == rat(-3, 4));
    CHECK(parse_rat("3.01") == rat(301, 100));
    CHECK(parse_rat("-0.5") == rat(-1, 2));
    CHECK(parse_rat("2.") == rat(2));
    CHECK(parse_rat("+9/3") == rat(3));
}

TEST_CASE("rational parsing rejects garbage") {
    CHECK_THROWS_AS(parse_rat(""), elr_error);
    CHECK_THROWS_AS(parse_rat("abc"), elr_error);
    CHECK_THROWS_AS(parse_rat("1/0"), elr_error);
    CHECK_THROWS_AS(parse_rat("1.2.3"), elr_error);
    CHECK_THROWS_AS(parse_rat("--4"), elr_error);
}

TEST_CASE("rational formatting is canonical p/q") {
    CHECK(format_rat(rat(3, 4)) == "3/4");
    CHECK(format_rat(rat(6, 8)) == "3/4");
    CHECK(format_rat(rat(-3)) == "-3/1");
    CHECK(format_rat(rat(0)) == "0/1");
    CHECK(parse_rat(format_rat(rat(22, 7))) == rat(22, 7));
}

TEST_CASE("doubles convert exactly") {
    CHECK(rat_from_double(0.5) == rat(1, 2));
    CHECK(rat_from_double(-0.75) == rat(-3, 4));
    CHECK(rat_to_double(rat(1, 2)) == 0.5);
}

TEST_CASE("orientation predicate signs") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
}

TEST_CASE("segment classification covers all contact kinds") {
    // crossing diagonals of a square
    CHECK(classify_segments(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)) == seg_rel::proper_cross);
    // shared endpoint
    CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)) == seg_rel::touch);
    // endpoint in the interior of the other segment
    CHECK(classify_segments(pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3)) == seg_rel::touch);
    // collinear with positive-length intersection
    CHECK(classify_segments(pt(0, 0), pt(3, 0), pt(1, 0), pt(5, 0)) == seg_rel::overlap);
    // one segment inside the other
    CHECK(classify_segments(pt(0, 0), pt(5, 0), pt(1, 0), pt(2, 0)) == seg_rel::overlap);
    // collinear, touching at one endpoint only
    CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0)) == seg_rel::touch);
    // collinear, separated
    CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)) == seg_rel::disjoint);
    // vertical collinear overlap
    CHECK(classify_segments(pt(1, 0), pt(1, 4), pt(1, 2), pt(1, 9)) == seg_rel::overlap);
    // parallel, never meeting
    CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)) == seg_rel::disjoint);
    // generic disjoint
    CHECK(classify_segments(pt(0, 0), pt(1, 1), pt(3, 0), pt(4, 5)) == seg_rel::disjoint);
}

TEST_CASE("interior point test is strict") {
    CHECK(point_in_segment_interior(pt(0, 0), pt(4, 0), pt(2, 0)));
    CHECK_FALSE(point_in_segment_interior(pt(0, 0), pt(4, 0), pt(0, 0)));
    CHECK_FALSE(point_in_segment_interior(pt(0, 0), pt(4, 0), pt(4, 0)));
    CHECK_FALSE(point_in_segment_interior(pt(0, 0), pt(4, 0), pt(2, 1)));
    CHECK_FALSE(point_in_segment_interior(pt(0, 0), pt(4, 0), pt(5, 0)));
}

TEST_CASE("angular comparator sorts directions counterclockwise from east") {
    std::vector<point> dirs = {pt(0, -1), pt(1, 1), pt(-1, 0), pt(1, 0),
                               pt(0, 1),  pt(-1, -1), pt(1, -1)};
    std::sort(dirs.begin(), dirs.end(), ccw_angle_less);
    std::vector<point> want = {pt(1, 0),  pt(1, 1),   pt(0, 1), pt(-1, 0),
                               pt(-1, -1), pt(0, -1), pt(1, -1)};
    REQUIRE(dirs.size() == want.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) CHECK(dirs[i] == want[i]);
}

TEST_CASE("polygon area sign tracks orientation") {
    std::vector<point> ccw = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    std::vector<point> cw(ccw.rbegin(), ccw.rend());
    CHECK(polygon_area2(ccw) == rat(8));
    CHECK(polygon_area2(cw) == rat(-8));
}
