#include <algorithm>
#include <cmath>
#include <vector>

#include "elr/leveling.hpp"

namespace elr {

namespace {

// one strict constraint sum(coef_i * x_var_i) > 0, solved with margin 1
struct lin_con {
    std::vector<std::pair<int, double>> terms;
    double norm2 = 0.0;
};

struct exact_con {
    std::vector<std::pair<int, rat>> terms;
};

} // namespace

straight_line_drawing realize_straight_line(const level_drawing& d, const rat& epsilon) {
    if (sgn(epsilon) <= 0) fail("PreconditionViolated", "epsilon must be positive");
    swlp_verdict sv = check_drawing_structure(d);
    if (!sv.ok) fail("PreconditionViolated", "invalid drawing: " + sv.failures.front());

    std::map<vid, int> var;
    std::vector<vid> vs;
    for (const auto& [v, l] : d.level) {
        (void)l;
        var[v] = static_cast<int>(vs.size());
        vs.push_back(v);
    }
    const int n = static_cast<int>(vs.size());

    std::vector<lin_con> cons;
    std::vector<exact_con> exact;
    auto add = [&](std::vector<std::pair<int, rat>> terms) {
        lin_con c;
        for (const auto& [i, q] : terms) {
            double cd = rat_to_double(q);
            c.terms.push_back({i, cd});
            c.norm2 += cd * cd;
        }
        cons.push_back(std::move(c));
        exact.push_back({std::move(terms)});
    };

    // per-row strict left-to-right order
    for (const auto& [l, row] : d.order) {
        (void)l;
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            add({{var.at(row[i + 1]), rat(1)}, {var.at(row[i]), rat(-1)}});
    }
    // long edges pass strictly inside their recorded gaps
    for (const auto& [e, rec] : d.gaps) {
        vid u = e.first, v = e.second;
        int lu = d.level.at(u), lv = d.level.at(v);
        for (const auto& [l, g] : rec) {
            rat lam(l - lu, lv - lu); // in (0,1)
            lam.canonicalize();
            rat cu = rat(1) - lam, cv = lam;
            const auto& row = d.order.at(l);
            if (g > 0) {
                // crossing x strictly right of row[g-1]
                add({{var.at(u), cu}, {var.at(v), cv}, {var.at(row[g - 1]), rat(-1)}});
            }
            if (g < static_cast<int>(row.size())) {
                add({{var.at(row[g]), rat(1)}, {var.at(u), -cu}, {var.at(v), -cv}});
            }
        }
    }

    // start from the per-row position index and relax toward margin-1 feasibility
    std::vector<double> x(n, 0.0);
    for (const auto& [l, row] : d.order) {
        (void)l;
        for (std::size_t i = 0; i < row.size(); ++i)
            x[var.at(row[i])] = static_cast<double>(i) * 2.0;
    }

    auto relax_pass = [&]() {
        double worst = 0.0;
        for (const auto& c : cons) {
            double s = 0.0;
            for (const auto& [i, cd] : c.terms) s += cd * x[i];
            if (s < 1.0 && c.norm2 > 0.0) {
                double step = 1.4 * (1.0 - s) / c.norm2;
                for (const auto& [i, cd] : c.terms) x[i] += step * cd;
                worst = std::max(worst, 1.0 - s);
            }
        }
        return worst;
    };

    auto verify = [&](const std::vector<rat>& xr) {
        for (const auto& c : exact) {
            rat s(0);
            for (const auto& [i, q] : c.terms) s += q * xr[i];
            if (sgn(s) <= 0) return false;
        }
        return true;
    };

    std::vector<rat> sol;
    bool found = false;
    const int max_rounds = 6;
    for (int round = 0; round < max_rounds && !found; ++round) {
        int passes = 400 * (1 << round);
        double worst = 1.0;
        for (int p = 0; p < passes; ++p) {
            worst = relax_pass();
            if (worst == 0.0) break;
        }
        for (long bits : {20L, 30L, 40L}) {
            mpz_class den = 1;
            den <<= bits;
            std::vector<rat> xr(n);
            for (int i = 0; i < n; ++i) {
                double scaled = std::nearbyint(x[i] * std::ldexp(1.0, static_cast<int>(bits)));
                if (!std::isfinite(scaled)) {
                    xr.clear();
                    break;
                }
                mpz_class num;
                mpz_set_d(num.get_mpz_t(), scaled);
                xr[i] = rat(num, den);
                xr[i].canonicalize();
            }
            if (!xr.empty() && verify(xr)) {
                sol = std::move(xr);
                found = true;
                break;
            }
        }
    }
    if (!found) fail("InfeasibleGaps", "no straight-line placement satisfies the gap records");

    // exact rescale: width exactly epsilon (or a single column at x = 0)
    rat lo = sol[0], hi = sol[0];
    for (const rat& q : sol) {
        if (q < lo) lo = q;
        if (q > hi) hi = q;
    }
    rat width = hi - lo;
    straight_line_drawing out;
    out.graph = d.graph;
    for (int i = 0; i < n; ++i) {
        rat xx = sgn(width) == 0 ? rat(0) : rat((sol[i] - lo) * epsilon / width);
        xx.canonicalize();
        rat yy(-d.level.at(vs[i]));
        out.coords[vs[i]] = point{xx, yy};
    }
    return out;
}

} // namespace elr
