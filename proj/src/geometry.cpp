#include "elr/geometry.hpp"

#include <cctype>
#include <cmath>

#include "elr/error.hpp"

namespace elr {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) fail("BadRational", "not a number: '" + s + "'");
    mpz_class v(body);
    return neg ? mpz_class(-v) : v;
}

} // namespace

rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num = parse_int(s.substr(0, slash));
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) fail("BadRational", "zero denominator: '" + s + "'");
        rat v(num, den);
        v.canonicalize();
        return v;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head = head.substr(1);
        }
        if (head.empty()) head = "0";
        if (tail.empty()) tail = "0";
        if (!all_digits(head) || !all_digits(tail))
            fail("BadRational", "not a number: '" + s + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < s.size() - dot - 1; ++i) scale *= 10;
        mpz_class num = mpz_class(head) * scale + mpz_class(tail);
        rat v(neg ? mpz_class(-num) : num, scale);
        v.canonicalize();
        return v;
    }
    return rat(parse_int(s));
}

std::string format_rat(const rat& v) {
    rat c = v;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double rat_to_double(const rat& v) { return v.get_d(); }

rat rat_from_double(double x) {
    if (!std::isfinite(x)) fail("BadRational", "non-finite double");
    return rat(x); // exact: every finite double is a dyadic rational
}

int orient(const point& a, const point& b, const point& c) {
    rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(det);
}

rat dist2(const point& a, const point& b) {
    rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool collinear_point_on_segment(const point& a, const point& b, const point& p) {
    if (a.x != b.x) {
        const rat& lo = a.x < b.x ? a.x : b.x;
        const rat& hi = a.x < b.x ? b.x : a.x;
        return lo <= p.x && p.x <= hi;
    }
    const rat& lo = a.y < b.y ? a.y : b.y;
    const rat& hi = a.y < b.y ? b.y : a.y;
    return lo <= p.y && p.y <= hi;
}

bool point_in_segment_interior(const point& a, const point& b, const point& p) {
    if (orient(a, b, p) != 0) return false;
    if (p == a || p == b) return false;
    return collinear_point_on_segment(a, b, p);
}

seg_rel classify_segments(const point& a, const point& b, const point& c, const point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return seg_rel::proper_cross;
    if (o1 == 0 && o2 == 0) {
        // all four points on one line: compare 1-d intervals
        bool c_in = collinear_point_on_segment(a, b, c);
        bool d_in = collinear_point_on_segment(a, b, d);
        bool a_in = collinear_point_on_segment(c, d, a);
        bool b_in = collinear_point_on_segment(c, d, b);
        if (!c_in && !d_in && !a_in && !b_in) return seg_rel::disjoint;
        const bool vertical = a.x == b.x; // collinear, so shared line is vertical
        auto coord = [&](const point& p) { return vertical ? p.y : p.x; };
        rat lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
        rat lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
        rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return seg_rel::disjoint;
        if (lo == hi) return seg_rel::touch;
        return seg_rel::overlap;
    }
    if (o1 == 0 && collinear_point_on_segment(a, b, c)) return seg_rel::touch;
    if (o2 == 0 && collinear_point_on_segment(a, b, d)) return seg_rel::touch;
    if (o3 == 0 && collinear_point_on_segment(c, d, a)) return seg_rel::touch;
    if (o4 == 0 && collinear_point_on_segment(c, d, b)) return seg_rel::touch;
    return seg_rel::disjoint;
}

bool ccw_angle_less(const point& u, const point& v) {
    auto half = [](const point& p) {
        return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    rat cross = u.x * v.y - u.y * v.x;
    return cross > 0;
}

rat polygon_area2(const std::vector<point>& poly) {
    rat s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const point& p = poly[i];
        const point& q = poly[(i + 1) % poly.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

affine_map affine_from_triangles(const point& p0, const point& p1, const point& p2,
                                 const point& q0, const point& q1, const point& q2) {
    rat ux = p1.x - p0.x, uy = p1.y - p0.y;
    rat vx = p2.x - p0.x, vy = p2.y - p0.y;
    rat det = ux * vy - uy * vx;
    if (sgn(det) == 0) fail("PreconditionViolated", "degenerate source triangle");
    // columns of the inverse of [u v]
    rat iux = vy / det, ivx = -vx / det;
    rat iuy = -uy / det, ivy = ux / det;
    rat wx = q1.x - q0.x, wy = q1.y - q0.y;
    rat zx = q2.x - q0.x, zy = q2.y - q0.y;
    affine_map t;
    t.a = wx * iux + zx * iuy;
    t.b = wx * ivx + zx * ivy;
    t.c = wy * iux + zy * iuy;
    t.d = wy * ivx + zy * ivy;
    t.tx = q0.x - (t.a * p0.x + t.b * p0.y);
    t.ty = q0.y - (t.c * p0.x + t.d * p0.y);
    return t;
}

} // namespace elr
