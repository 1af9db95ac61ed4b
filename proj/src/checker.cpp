#include <algorithm>
#include <vector>

#include "elr/geometry.hpp"
#include "elr/metrics.hpp"

namespace elr {

namespace {

struct ipt {
    long long x = 0, y = 0;
};

int sign128(__int128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

int orient_i(const ipt& a, const ipt& b, const ipt& c) {
    __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                     static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return sign128(cross);
}

bool eq_i(const ipt& a, const ipt& b) { return a.x == b.x && a.y == b.y; }

// p collinear with segment ab: is it inside the closed bounding range?
bool in_range_i(const ipt& a, const ipt& b, const ipt& p) {
    if (a.x != b.x) return (p.x >= std::min(a.x, b.x)) && (p.x <= std::max(a.x, b.x));
    return (p.y >= std::min(a.y, b.y)) && (p.y <= std::max(a.y, b.y));
}

seg_rel classify_i(const ipt& a, const ipt& b, const ipt& c, const ipt& d) {
    int o1 = orient_i(a, b, c), o2 = orient_i(a, b, d);
    int o3 = orient_i(c, d, a), o4 = orient_i(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return seg_rel::proper_cross;
    if (o1 == 0 && o2 == 0) {
        bool any = in_range_i(a, b, c) || in_range_i(a, b, d) || in_range_i(c, d, a) ||
                   in_range_i(c, d, b);
        if (!any) return seg_rel::disjoint;
        const bool vertical = a.x == b.x;
        auto key = [&](const ipt& p) { return vertical ? p.y : p.x; };
        long long lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
        long long hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
        if (lo > hi) return seg_rel::disjoint;
        if (lo == hi) return seg_rel::touch;
        return seg_rel::overlap;
    }
    if (o1 == 0 && in_range_i(a, b, c)) return seg_rel::touch;
    if (o2 == 0 && in_range_i(a, b, d)) return seg_rel::touch;
    if (o3 == 0 && in_range_i(c, d, a)) return seg_rel::touch;
    if (o4 == 0 && in_range_i(c, d, b)) return seg_rel::touch;
    return seg_rel::disjoint;
}

// scale rational coordinates onto the integer grid when they fit in 60 bits
bool to_integer_grid(const straight_line_drawing& d, const std::vector<vid>& vs,
                     std::vector<ipt>& out) {
    mpz_class dx = 1, dy = 1;
    for (vid v : vs) {
        const point& p = d.coords.at(v);
        mpz_lcm(dx.get_mpz_t(), dx.get_mpz_t(), p.x.get_den().get_mpz_t());
        mpz_lcm(dy.get_mpz_t(), dy.get_mpz_t(), p.y.get_den().get_mpz_t());
        if (mpz_sizeinbase(dx.get_mpz_t(), 2) > 60 || mpz_sizeinbase(dy.get_mpz_t(), 2) > 60)
            return false;
    }
    out.clear();
    out.reserve(vs.size());
    for (vid v : vs) {
        const point& p = d.coords.at(v);
        mpz_class sx = p.x.get_num() * (dx / p.x.get_den());
        mpz_class sy = p.y.get_num() * (dy / p.y.get_den());
        if (mpz_sizeinbase(sx.get_mpz_t(), 2) > 60 || mpz_sizeinbase(sy.get_mpz_t(), 2) > 60)
            return false;
        if (!sx.fits_slong_p() || !sy.fits_slong_p()) return false;
        out.push_back({sx.get_si(), sy.get_si()});
    }
    return true;
}

seg_rel classify_q(const point& a, const point& b, const point& c, const point& d) {
    return classify_segments(a, b, c, d);
}

bool eq_q(const point& a, const point& b) { return a == b; }

template <class PT, class CLS, class EQ>
planarity_verdict scan_pairs(const plane_graph& g, const std::vector<PT>& pos,
                             const std::map<vid, int>& idx, CLS classify, EQ eq,
                             bool parallel) {
    const auto& es = g.edges;
    const int m = static_cast<int>(es.size());
    for (const auto& e : es)
        if (eq(pos[idx.at(e.first)], pos[idx.at(e.second)]))
            fail("DegenerateEdge", "edge (" + std::to_string(e.first) + "," +
                                       std::to_string(e.second) + ") has zero length");

    std::vector<violation> out;
    auto handle = [&](int i, int j, std::vector<violation>& sink) {
        const edge& e1 = es[i];
        const edge& e2 = es[j];
        bool shared = e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
                      e1.second == e2.second;
        seg_rel r = classify(pos[idx.at(e1.first)], pos[idx.at(e1.second)],
                             pos[idx.at(e2.first)], pos[idx.at(e2.second)]);
        if (r == seg_rel::proper_cross) sink.push_back({e1, e2, "crossing"});
        else if (r == seg_rel::overlap) sink.push_back({e1, e2, "overlap"});
        else if (r == seg_rel::touch && !shared)
            sink.push_back({e1, e2, "endpoint-through-vertex"});
    };

    if (parallel) {
#pragma omp parallel
        {
            std::vector<violation> local;
#pragma omp for schedule(dynamic, 16)
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) handle(i, j, local);
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) handle(i, j, out);
    }
    std::sort(out.begin(), out.end(), [](const violation& a, const violation& b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.kind < b.kind;
    });
    planarity_verdict v;
    v.violations = std::move(out);
    v.planar = v.violations.empty();
    return v;
}

planarity_verdict check_impl(const straight_line_drawing& d, bool parallel) {
    std::vector<vid> vs = d.graph.vertices;
    for (vid v : vs)
        if (!d.coords.count(v))
            fail("PreconditionViolated", "no coordinates for vertex " + std::to_string(v));
    std::map<vid, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);

    std::vector<ipt> grid;
    if (to_integer_grid(d, vs, grid))
        return scan_pairs(d.graph, grid, idx, classify_i, eq_i, parallel);
    std::vector<point> pts;
    pts.reserve(vs.size());
    for (vid v : vs) pts.push_back(d.coords.at(v));
    return scan_pairs(d.graph, pts, idx, classify_q, eq_q, parallel);
}

} // namespace

planarity_verdict check_planar_straight_line_serial(const straight_line_drawing& d) {
    return check_impl(d, false);
}

planarity_verdict check_planar_straight_line(const straight_line_drawing& d) {
    return check_impl(d, true);
}

} // namespace elr
