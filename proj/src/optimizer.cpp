#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "elr/families.hpp"
#include "elr/geometry.hpp"
#include "elr/metrics.hpp"

namespace elr {

namespace {

struct problem {
    const plane_graph* g = nullptr;
    std::vector<vid> vs;
    std::map<vid, int> idx;
    std::vector<std::pair<int, int>> edges;              // by index
    std::vector<std::vector<int>> incident;              // vertex -> edge ids
    std::vector<std::array<int, 3>> inner_faces;         // triangles, by index
    std::vector<std::vector<int>> faces_of;              // vertex -> inner face ids
    std::vector<int> interior;                           // movable vertex indices
};

double face_area2(const problem& pb, const std::vector<double>& x,
                  const std::vector<double>& y, int f) {
    const auto& t = pb.inner_faces[f];
    return (x[t[1]] - x[t[0]]) * (y[t[2]] - y[t[0]]) -
           (y[t[1]] - y[t[0]]) * (x[t[2]] - x[t[0]]);
}

bool faces_ok_at(const problem& pb, const std::vector<double>& x, const std::vector<double>& y,
                 int v) {
    for (int f : pb.faces_of[v])
        if (face_area2(pb, x, y, f) <= 0.0) return false;
    return true;
}

// squared local ratio: worst incident max/min squared edge length over vertices
double rho2(const problem& pb, const std::vector<double>& len2) {
    double worst = 1.0;
    for (std::size_t v = 0; v < pb.incident.size(); ++v) {
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (int e : pb.incident[v]) {
            double l = len2[e];
            if (first || l < lo) lo = l;
            if (first || l > hi) hi = l;
            first = false;
        }
        if (!first && lo > 0.0) worst = std::max(worst, hi / lo);
    }
    return worst;
}

double barrier(const problem& pb, const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (int f = 0; f < static_cast<int>(pb.inner_faces.size()); ++f) {
        double a = face_area2(pb, x, y, f);
        if (a <= 0.0) return 1e300;
        s -= std::log(a);
    }
    return s;
}

void update_lengths(const problem& pb, const std::vector<double>& x,
                    const std::vector<double>& y, std::vector<double>& len2, int v) {
    for (int e : pb.incident[v]) {
        auto [a, b] = pb.edges[e];
        double dx = x[a] - x[b], dy = y[a] - y[b];
        len2[e] = dx * dx + dy * dy;
    }
}

// exact coords for the pinned outer triangle plus interior re-insertion
std::map<vid, point> initial_exact(const plane_graph& g, const std::vector<vid>& peel) {
    std::map<vid, point> c;
    c[g.outer_face[0]] = {rat(0), rat(0)};
    c[g.outer_face[1]] = {rat(1, 2), rat(1)};
    c[g.outer_face[2]] = {rat(1), rat(0)};

    // chain-aware start: if the graph is a nesting chain, use its reference shape
    if (g.n() % 2 == 1 && g.n() >= 5) {
        int k = static_cast<int>(g.n()) / 2;
        lower_bound_chain ch;
        bool chainlike = false;
        try {
            ch = gen_lower_bound_chain(k);
            chainlike = ch.graph.vertices == g.vertices && ch.graph.edges == g.edges;
        } catch (const elr_error&) {
            chainlike = false;
        }
        std::set<vid> outer(g.outer_face.begin(), g.outer_face.end());
        if (chainlike && outer == std::set<vid>{ch.apex, ch.b[k - 1], ch.c[k - 1]}) {
            auto ref = chain_reference_drawing(ch);
            affine_map m = affine_from_triangles(
                ref.coords.at(g.outer_face[0]), ref.coords.at(g.outer_face[1]),
                ref.coords.at(g.outer_face[2]), c.at(g.outer_face[0]), c.at(g.outer_face[1]),
                c.at(g.outer_face[2]));
            for (vid v : g.vertices) c[v] = m.apply(ref.coords.at(v));
            return c;
        }
    }

    // generic start: undo the peel, dropping each vertex at its neighbors' centroid
    std::set<vid> placed(g.outer_face.begin(), g.outer_face.end());
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        vid v = *it;
        rat sx(0), sy(0);
        int cnt = 0;
        for (vid w : g.neighbors(v))
            if (placed.count(w)) {
                sx += c.at(w).x;
                sy += c.at(w).y;
                ++cnt;
            }
        if (cnt != 3) fail("InfeasibleStart", "re-insertion neighborhood incomplete");
        c[v] = {sx / 3, sy / 3};
        placed.insert(v);
    }
    return c;
}

struct snapshot_best {
    bool have = false;
    rat rho_sq;
    straight_line_drawing drawing;
};

// exactify, validate with exact arithmetic, report to the audit hook
void take_snapshot(const problem& pb, const std::vector<double>& x,
                   const std::vector<double>& y, const optimize_options& opt,
                   snapshot_best& best) {
    straight_line_drawing d;
    d.graph = *pb.g;
    for (std::size_t i = 0; i < pb.vs.size(); ++i) {
        try {
            d.coords[pb.vs[i]] = {rat_from_double(x[i]), rat_from_double(y[i])};
        } catch (const elr_error&) {
            return;
        }
    }
    try {
        if (!check_planar_straight_line_serial(d).planar) return;
        if (!embedding_preserved(d)) return;
        ratio_report r = ratios(d);
        if (!best.have || r.rho_local_sq < best.rho_sq) {
            best.have = true;
            best.rho_sq = r.rho_local_sq;
            best.drawing = d;
        }
        if (opt.on_feasible_snapshot) {
#pragma omp critical(elr_snapshot_hook)
            opt.on_feasible_snapshot(d);
        }
    } catch (const elr_error&) {
        return;
    }
}

} // namespace

optimize_result optimize_local_ratio(const plane_graph& g, int restarts, int iterations,
                                     uint64_t seed, const optimize_options& opt) {
    if (restarts < 1 || iterations < 0) fail("PreconditionViolated", "bad optimizer budget");
    std::vector<vid> peel = peel_order_keeping_outer(g);
    if (g.outer_face.size() != 3 || (g.n() > 3 && peel.empty()))
        fail("InfeasibleStart", "input is not a stacked triangulation over its outer face");

    problem pb;
    pb.g = &g;
    pb.vs = g.vertices;
    for (std::size_t i = 0; i < pb.vs.size(); ++i) pb.idx[pb.vs[i]] = static_cast<int>(i);
    for (const auto& e : g.edges) pb.edges.push_back({pb.idx.at(e.first), pb.idx.at(e.second)});
    pb.incident.assign(pb.vs.size(), {});
    for (int e = 0; e < static_cast<int>(pb.edges.size()); ++e) {
        pb.incident[pb.edges[e].first].push_back(e);
        pb.incident[pb.edges[e].second].push_back(e);
    }
    face_set fs = extract_faces(g);
    pb.faces_of.assign(pb.vs.size(), {});
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        if (f == fs.outer_index) continue;
        if (fs.faces[f].size() != 3)
            fail("InfeasibleStart", "non-triangular inner face");
        std::array<int, 3> t = {pb.idx.at(fs.faces[f][0]), pb.idx.at(fs.faces[f][1]),
                                pb.idx.at(fs.faces[f][2])};
        int id = static_cast<int>(pb.inner_faces.size());
        pb.inner_faces.push_back(t);
        for (int c : t) pb.faces_of[c].push_back(id);
    }
    std::set<vid> outer(g.outer_face.begin(), g.outer_face.end());
    for (std::size_t i = 0; i < pb.vs.size(); ++i)
        if (!outer.count(pb.vs[i])) pb.interior.push_back(static_cast<int>(i));

    std::map<vid, point> start = initial_exact(g, peel);
    std::vector<double> x0(pb.vs.size()), y0(pb.vs.size());
    for (std::size_t i = 0; i < pb.vs.size(); ++i) {
        x0[i] = rat_to_double(start.at(pb.vs[i]).x);
        y0[i] = rat_to_double(start.at(pb.vs[i]).y);
    }

    std::vector<snapshot_best> per_restart(restarts);
    std::vector<double> restart_best(restarts, std::numeric_limits<double>::infinity());

#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (r + 1)));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);

        std::vector<double> x = x0, y = y0;
        std::vector<double> len2(pb.edges.size());
        for (std::size_t i = 0; i < pb.vs.size(); ++i)
            update_lengths(pb, x, y, len2, static_cast<int>(i));

        // jitter later restarts away from the common start
        if (r > 0 && !pb.interior.empty()) {
            for (int v : pb.interior) {
                double scale = 0.0;
                for (int e : pb.incident[v]) scale += std::sqrt(len2[e]);
                scale /= static_cast<double>(pb.incident[v].size());
                for (double damp = 0.2; damp > 1e-6; damp *= 0.5) {
                    double nx = x[v] + damp * scale * gauss(rng);
                    double ny = y[v] + damp * scale * gauss(rng);
                    std::swap(x[v], nx);
                    std::swap(y[v], ny);
                    if (faces_ok_at(pb, x, y, v)) break;
                    std::swap(x[v], nx);
                    std::swap(y[v], ny);
                }
                update_lengths(pb, x, y, len2, v);
            }
        }

        double cur_rho = rho2(pb, len2);
        double cur_bar = barrier(pb, x, y);
        double best_rho = cur_rho;
        take_snapshot(pb, x, y, opt, per_restart[r]);

        const double t_hi = opt.initial_temperature, t_lo = 1e-4;
        for (int it = 0; it < iterations && !pb.interior.empty(); ++it) {
            double frac = iterations > 1 ? static_cast<double>(it) / (iterations - 1) : 1.0;
            double temp = t_hi * std::pow(t_lo / t_hi, frac);

            int v = pb.interior[static_cast<int>(uni(rng) * pb.interior.size()) %
                                pb.interior.size()];
            double scale = 0.0;
            for (int e : pb.incident[v]) scale += std::sqrt(len2[e]);
            scale /= static_cast<double>(pb.incident[v].size());

            double ox = x[v], oy = y[v];
            int kind = static_cast<int>(uni(rng) * 3.0) % 3;
            if (kind == 0) {
                x[v] += temp * scale * gauss(rng);
                y[v] += temp * scale * gauss(rng);
            } else if (kind == 1) {
                double cx = 0.0, cy = 0.0;
                int cnt = 0;
                for (int e : pb.incident[v]) {
                    int w = pb.edges[e].first == v ? pb.edges[e].second : pb.edges[e].first;
                    cx += x[w];
                    cy += y[w];
                    ++cnt;
                }
                double a = uni(rng);
                x[v] += a * (cx / cnt - x[v]);
                y[v] += a * (cy / cnt - y[v]);
            } else {
                // drift toward the midpoint of the nearest and farthest neighbor
                int elo = pb.incident[v][0], ehi = pb.incident[v][0];
                for (int e : pb.incident[v]) {
                    if (len2[e] < len2[elo]) elo = e;
                    if (len2[e] > len2[ehi]) ehi = e;
                }
                auto other = [&](int e) {
                    return pb.edges[e].first == v ? pb.edges[e].second : pb.edges[e].first;
                };
                int wl = other(elo), wh = other(ehi);
                double mx = 0.5 * (x[wl] + x[wh]), my = 0.5 * (y[wl] + y[wh]);
                double a = uni(rng);
                x[v] += a * (mx - x[v]);
                y[v] += a * (my - y[v]);
            }

            bool ok = faces_ok_at(pb, x, y, v);
            double nrho = cur_rho, nbar = cur_bar;
            if (ok) {
                update_lengths(pb, x, y, len2, v);
                nrho = rho2(pb, len2);
                nbar = barrier(pb, x, y);
            }
            bool accept = false;
            if (ok) {
                double delta = (nrho - cur_rho) + opt.barrier_weight * (nbar - cur_bar);
                double rel = temp * std::max(1.0, 0.05 * cur_rho);
                accept = delta <= 0.0 || uni(rng) < std::exp(-delta / rel);
            }
            if (accept) {
                cur_rho = nrho;
                cur_bar = nbar;
                bool improved = cur_rho < 0.99 * best_rho;
                if (improved) best_rho = cur_rho;
                if (improved || (opt.snapshot_every > 0 && (it + 1) % opt.snapshot_every == 0))
                    take_snapshot(pb, x, y, opt, per_restart[r]);
            } else {
                x[v] = ox;
                y[v] = oy;
                update_lengths(pb, x, y, len2, v);
            }
        }
        take_snapshot(pb, x, y, opt, per_restart[r]);
        restart_best[r] = per_restart[r].have
                              ? std::sqrt(rat_to_double(per_restart[r].rho_sq))
                              : std::numeric_limits<double>::infinity();
    }

    optimize_result res;
    res.restart_best = restart_best;
    for (int r = 0; r < restarts; ++r) {
        if (!per_restart[r].have) continue;
        if (res.best_restart < 0 || per_restart[r].rho_sq < res.best_rho_local_sq) {
            res.best_restart = r;
            res.best_rho_local_sq = per_restart[r].rho_sq;
            res.best = per_restart[r].drawing;
        }
    }
    if (res.best_restart < 0)
        fail("InfeasibleStart", "no restart produced a feasible exact drawing");
    res.best_rho_local = std::sqrt(rat_to_double(res.best_rho_local_sq));
    return res;
}

} // namespace elr
