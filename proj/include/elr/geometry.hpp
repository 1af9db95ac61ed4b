#pragma once

#include <vector>

#include "elr/rational.hpp"

namespace elr {

struct point {
    rat x, y;
};

inline bool operator==(const point& a, const point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const point& a, const point& b) { return !(a == b); }

// +1 if a,b,c make a left turn (counterclockwise), -1 right turn, 0 collinear
int orient(const point& a, const point& b, const point& c);

// squared euclidean distance
rat dist2(const point& a, const point& b);

// assuming a, b, p collinear: is p inside the closed segment [a,b]?
bool collinear_point_on_segment(const point& a, const point& b, const point& p);

// p strictly inside the open segment (a,b) (collinearity checked here)
bool point_in_segment_interior(const point& a, const point& b, const point& p);

// how two closed segments meet, for the planarity checker
enum class seg_rel {
    disjoint,      // no common point
    proper_cross,  // interiors cross in one point
    touch,         // exactly one common point, an endpoint of at least one segment
    overlap        // collinear with a shared sub-segment of positive length
};

seg_rel classify_segments(const point& a, const point& b, const point& c, const point& d);

// counterclockwise angular order around the origin starting from direction (1,0);
// returns true if direction u comes strictly before direction v
bool ccw_angle_less(const point& u, const point& v);

// twice the signed area of a polygon (positive when counterclockwise)
rat polygon_area2(const std::vector<point>& poly);

// exact affine transform x' = a x + b y + tx, y' = c x + d y + ty
struct affine_map {
    rat a, b, c, d, tx, ty;

    point apply(const point& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
};

// the unique affine map sending triangle (p0,p1,p2) onto (q0,q1,q2)
affine_map affine_from_triangles(const point& p0, const point& p1, const point& p2,
                                 const point& q0, const point& q1, const point& q2);

} // namespace elr
