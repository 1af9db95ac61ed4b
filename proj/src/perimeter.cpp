#include <algorithm>

#include "elr/geometry.hpp"
#include "elr/metrics.hpp"

namespace elr {

namespace {

// sum of square roots of nonnegative rationals, bracketed to p bits:
// returns [lo, hi] with the true value strictly inside (units of 1)
std::pair<rat, rat> bracket_sqrt_sum(const std::vector<rat>& radicands, long bits) {
    mpz_class scale = 1;
    scale <<= 2 * bits;
    mpz_class den = 1;
    den <<= bits;
    mpz_class lo_sum = 0, hi_sum = 0;
    for (const rat& q : radicands) {
        if (sgn(q) < 0) fail("PreconditionViolated", "negative radicand");
        mpz_class m = (q.get_num() * scale) / q.get_den(); // floor
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        lo_sum += s;
        hi_sum += s + 1;
    }
    rat lo(lo_sum, den), hi(hi_sum, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

// sign of (sum sqrt a_i) - (sum sqrt b_i); fails loudly if undecidable
int compare_sqrt_sums(const std::vector<rat>& a, const std::vector<rat>& b) {
    for (long bits : {64L, 128L, 256L, 512L}) {
        auto [alo, ahi] = bracket_sqrt_sum(a, bits);
        auto [blo, bhi] = bracket_sqrt_sum(b, bits);
        if (alo > bhi) return 1;
        if (ahi < blo) return -1;
    }
    fail("PreconditionViolated", "square-root sum comparison undecided at 512 bits");
}

} // namespace

bool embedding_preserved(const straight_line_drawing& d) {
    face_set fs = extract_faces(d.graph);
    for (int i = 0; i < static_cast<int>(fs.faces.size()); ++i) {
        std::vector<point> poly;
        for (vid v : fs.faces[i]) poly.push_back(d.coords.at(v));
        int s = sgn(polygon_area2(poly));
        if (i == fs.outer_index ? s >= 0 : s <= 0) return false;
    }
    return true;
}

perimeter_verdict check_perimeter_growth(const straight_line_drawing& d,
                                         const lower_bound_chain& ch) {
    perimeter_verdict out;
    out.ok = true;

    // shortest edge among the triangle edges sets the scale
    rat s2;
    bool first = true;
    std::vector<std::vector<rat>> tri(ch.k); // squared side lengths per triangle
    for (int i = 1; i <= ch.k; ++i) {
        vid b = ch.b[i - 1], c = ch.c[i - 1];
        tri[i - 1] = {dist2(d.coords.at(ch.apex), d.coords.at(b)),
                      dist2(d.coords.at(ch.apex), d.coords.at(c)),
                      dist2(d.coords.at(b), d.coords.at(c))};
        for (const rat& q : tri[i - 1]) {
            if (sgn(q) == 0) {
                out.ok = false;
                out.first_failing_index = i;
                out.detail = "degenerate triangle side";
                return out;
            }
            if (first || q < s2) s2 = q;
            first = false;
        }
    }

    const rat step_coef(9, 100);   // (3/10)^2, squared margin coefficient
    for (int i = 2; i <= ch.k; ++i) {
        std::vector<rat> rhs = tri[i - 2];
        rhs.push_back(step_coef * s2); // + (3/10) * scale
        if (compare_sqrt_sums(tri[i - 1], rhs) <= 0) {
            out.ok = false;
            out.first_failing_index = i;
            out.detail = "perimeter did not grow by 3/10 of the scale at triangle " +
                         std::to_string(i);
            return out;
        }
    }
    for (int i = 1; i <= ch.k; ++i) {
        std::vector<rat> rhs = {step_coef * rat(i) * rat(i) * s2}; // (3/10) * i * scale
        if (compare_sqrt_sums(tri[i - 1], rhs) <= 0) {
            out.ok = false;
            out.first_failing_index = i;
            out.detail = "perimeter of triangle " + std::to_string(i) +
                         " below 3/10 of its index times the scale";
            return out;
        }
    }
    return out;
}

} // namespace elr
