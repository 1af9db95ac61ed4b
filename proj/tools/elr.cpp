#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "elr/error.hpp"
#include "elr/families.hpp"
#include "elr/halin.hpp"
#include "elr/io.hpp"
#include "elr/metrics.hpp"
#include "elr/twoouter.hpp"

using namespace elr;

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void spit(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + path);
}

int exit_code_for(const elr_error& e) {
    static const std::set<std::string> family = {
        "IsK4",          "NotHalin",           "NotGeneralizedHalin", "NotInFamily",
        "NotCycleCycle", "NotCycleCaterpillar", "NotOuterplanar"};
    if (family.count(e.code)) return 2;
    if (e.code == "BadRational") return 3;
    return 1;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const elr_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

std::uint64_t env_seed() {
    if (const char* env = std::getenv("ELR_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string derived_name(const std::string& input, const std::string& suffix) {
    std::string out = input;
    if (out.size() > 5 && out.compare(out.size() - 5, 5, ".json") == 0)
        out.resize(out.size() - 5);
    return out + suffix;
}

// run `work` over every input; with several inputs they are processed
// independently (in parallel when jobs > 1) and the worst exit code wins
template <class F>
int for_each_input(const std::vector<std::string>& in, int jobs, F&& work) {
    std::vector<std::string> inputs = in;
    if (inputs.empty()) inputs.push_back("-");
    if (inputs.size() == 1) return guarded([&] { return work(inputs[0], false); });

    std::vector<int> codes(inputs.size(), 0);
    std::vector<std::string> messages(inputs.size());
#pragma omp parallel for num_threads(std::max(1, jobs)) schedule(dynamic)
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        try {
            codes[i] = work(inputs[i], true);
        } catch (const elr_error& e) {
            codes[i] = exit_code_for(e);
            messages[i] = e.what();
        } catch (const std::exception& e) {
            codes[i] = 3;
            messages[i] = e.what();
        }
    }
    int worst = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (!messages[i].empty())
            std::cerr << inputs[i] << ": error: " << messages[i] << "\n";
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

// ---- gen ----

plane_graph generate(const std::string& family, int size, int k, std::uint64_t seed,
                     json& params) {
    params["family"] = family;
    if (family == "lower-chain") {
        int kk = k > 0 ? k : std::max(1, (size - 1) / 2);
        params["k"] = kk;
        return gen_lower_bound_chain(kk).graph;
    }
    if (family == "lower-glued") {
        int kk = k > 0 ? k : std::max(1, size / 4); // 4k vertices; sizes round down
        params["k"] = kk;
        return gen_lower_bound_glued(kk);
    }
    params["size"] = size;
    if (family == "halin") return gen_random_halin(size, seed);
    if (family == "ghalin") return gen_random_generalized_halin(size, seed);
    if (family == "outerplanar") return gen_random_outerplanar(size, seed);
    if (family == "cycle-cycle") {
        int kk = std::max(3, size / 3), h = std::max(3, size - kk);
        return gen_random_cycle_cycle(h, kk, seed);
    }
    if (family == "op-cycle") {
        int core = std::max(7, 3 * size / 4);
        int kk = std::max(3, core / 3), h = std::max(3, core - kk);
        attachment_params ap{std::max(1, size / 10), std::max(2, size / 8)};
        return gen_random_outerplanar_attachment(gen_random_cycle_cycle(h, kk, seed),
                                                 ap, seed + 1);
    }
    caterpillar_params p;
    int core = family == "op-cat" ? std::max(8, 3 * size / 4) : size;
    p.outer_size = std::max(4, core / 2);
    p.spine_size = std::max(1, core / 6);
    int rest = std::max(0, core - p.outer_size - p.spine_size);
    p.side_leaf_count = rest / 4;
    p.leaf_count = rest - p.side_leaf_count;
    if (family == "cycle-cat") return gen_random_cycle_caterpillar(p, seed);
    if (family == "op-cat") {
        attachment_params ap{std::max(1, size / 10), std::max(2, size / 8)};
        return gen_random_outerplanar_attachment(gen_random_cycle_caterpillar(p, seed),
                                                 ap, seed + 1);
    }
    fail("NotInFamily", "unknown family " + family);
    return {};
}

// ---- draw ----

level_drawing draw_two_outer(const plane_graph& g) {
    auto s = recognize_two_outer(g);
    if (s.kind == "cycle-cycle" || s.kind == "outerplanar-cycle")
        return draw_outerplanar_cycle(g);
    return draw_outerplanar_caterpillar(g);
}

level_drawing draw_outerplanar_graph(const plane_graph& g) {
    validate_graph(g);
    if (g.outer_face.size() < 2) fail("NotOuterplanar", "no boundary edge to anchor");
    return outerplanar_1swlp(g, anchor_mode::edge_on_top,
                             mk_edge(g.outer_face[0], g.outer_face[1]));
}

level_drawing draw_dispatch(const plane_graph& g, std::string algo, const json& in) {
    if (algo == "auto" && in.contains("family")) {
        std::string fam = in.at("family").get<std::string>();
        for (const char* known : {"halin", "ghalin", "cycle-cycle", "op-cycle",
                                  "cycle-cat", "op-cat", "outerplanar"})
            if (fam == known) algo = fam;
    }
    if (algo == "halin") return draw_halin(recognize_halin(g));
    if (algo == "ghalin") return draw_generalized_halin(g);
    if (algo == "cycle-cycle") return draw_cycle_cycle(recognize_two_outer(g));
    if (algo == "op-cycle") return draw_outerplanar_cycle(g);
    if (algo == "cycle-cat") return draw_cycle_caterpillar(recognize_two_outer(g));
    if (algo == "op-cat") return draw_outerplanar_caterpillar(g);
    if (algo == "outerplanar") return draw_outerplanar_graph(g);

    // auto: most specific family first; a K4 rejection is final, the graph is
    // a genuine Halin graph that this toolkit cannot draw within bounds
    try {
        return draw_halin(recognize_halin(g));
    } catch (const elr_error& e) {
        if (e.code == "IsK4") throw;
    }
    try {
        return draw_generalized_halin(g);
    } catch (const elr_error& e) {
        if (e.code == "IsK4") throw;
    }
    try {
        return draw_two_outer(g);
    } catch (const elr_error&) {
    }
    try {
        return draw_outerplanar_graph(g);
    } catch (const elr_error&) {
    }
    fail("NotInFamily", "no drawing algorithm accepts this graph");
    return {};
}

// ---- check ----

bool same_graph(const plane_graph& a, const plane_graph& b) {
    return a.vertices == b.vertices && a.edges == b.edges && a.rotation == b.rotation &&
           a.outer_face == b.outer_face;
}

struct check_flags {
    std::string graph_path;
    std::string span, ratio;
    bool perimeter = false;
};

int check_straight_line(straight_line_drawing sl, const check_flags& flags,
                        std::ostringstream& log) {
    bool ok = true;
    validate_graph(sl.graph);
    for (vid v : sl.graph.vertices)
        if (!sl.coords.count(v)) fail("UnknownVertex", "no coordinates for vertex " +
                                                           std::to_string(v));
    auto pv = check_planar_straight_line(sl);
    if (pv.planar) {
        log << "planar: ok\n";
    } else {
        ok = false;
        const auto& v = pv.violations.front();
        log << "planar: " << pv.violations.size() << " violations (first: " << v.kind
            << " between " << v.e1.first << "-" << v.e1.second << " and " << v.e2.first
            << "-" << v.e2.second << ")\n";
    }
    if (!flags.ratio.empty()) {
        rat bound = parse_rat(flags.ratio);
        auto rr = ratios(sl);
        bool rok = ratio_global_at_most(rr, bound);
        ok = ok && rok;
        log << "ratio: " << rr.rho_global << (rok ? " <= " : " > ") << flags.ratio
            << (rok ? " ok" : " FAILED") << "\n";
    }
    if (flags.perimeter) {
        int n = sl.graph.n();
        int k = (n - 1) / 2;
        bool chain_ok = n >= 3 && n % 2 == 1;
        lower_bound_chain ch;
        if (chain_ok) {
            ch = gen_lower_bound_chain(k);
            plane_graph expect = ch.graph, got = sl.graph;
            canonicalize(expect);
            canonicalize(got);
            chain_ok = same_graph(expect, got);
        }
        if (!chain_ok) {
            ok = false;
            log << "perimeter: input is not a lower-bound chain graph\n";
        } else {
            auto pg = check_perimeter_growth(sl, ch);
            ok = ok && pg.ok;
            log << "perimeter: " << (pg.ok ? "ok" : "FAILED " + pg.detail) << "\n";
        }
    }
    return ok ? 0 : 1;
}

int check_one(const json& j, const check_flags& flags, std::ostringstream& log) {
    const plane_graph* override_ptr = nullptr;
    plane_graph external;
    if (!flags.graph_path.empty()) {
        external = graph_from_json(json::parse(slurp(flags.graph_path)));
        if (j.contains("graph") && !same_graph(graph_from_json(j.at("graph")), external))
            fail("PreconditionViolated", "drawing graph differs from --graph file");
        override_ptr = &external;
    }

    if (j.contains("coords"))
        return check_straight_line(straight_line_from_json(j, override_ptr), flags, log);

    level_drawing d = level_drawing_from_json(j, override_ptr);
    bool ok = true;
    auto sv = check_drawing_structure(d);
    if (sv.ok) {
        log << "structure: ok\n";
    } else {
        ok = false;
        log << "structure: " << sv.failures.front() << "\n";
    }
    if (!flags.span.empty()) {
        int limit = std::stoi(flags.span);
        int ms = max_span(d);
        bool sok = ms <= limit;
        ok = ok && sok;
        log << "span: max " << ms << (sok ? " <= " : " > ") << limit
            << (sok ? " ok" : " FAILED") << "\n";
    }
    if (!ok) return 1;
    // bounds on the realized geometry (doubling first when span-0 edges exist)
    level_drawing dd = audit_span(d).count(0) ? double_levels(d) : d;
    straight_line_drawing sl = realize_straight_line(dd, rat(1, 100));
    return check_straight_line(std::move(sl), flags, log);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded edge-length-ratio planar drawing toolkit"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    // gen
    auto* cgen = app.add_subcommand("gen", "generate a graph of a named family");
    std::string gen_family;
    int gen_size = 20, gen_k = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "-";
    cgen->add_option("family", gen_family, "family name")
        ->required()
        ->check(CLI::IsMember({"halin", "ghalin", "cycle-cycle", "op-cycle",
                               "cycle-cat", "op-cat", "outerplanar", "lower-chain",
                               "lower-glued"}));
    cgen->add_option("--size", gen_size, "target vertex count")->check(CLI::PositiveNumber);
    cgen->add_option("--k", gen_k, "chain length for the lower-bound families")
        ->check(CLI::PositiveNumber);
    auto* gen_seed_opt = cgen->add_option("--seed", gen_seed, "generator seed");
    cgen->add_option("-o,--output", gen_out, "output file, - for stdout");

    // draw
    auto* cdraw = app.add_subcommand("draw", "draw a graph on equispaced levels");
    std::string draw_algo = "auto";
    std::vector<std::string> draw_inputs;
    std::string draw_out = "-", draw_svg;
    int draw_jobs = 1;
    cdraw->add_option("--algorithm", draw_algo, "drawing algorithm")
        ->check(CLI::IsMember({"auto", "halin", "ghalin", "cycle-cycle", "op-cycle",
                               "cycle-cat", "op-cat", "outerplanar"}));
    cdraw->add_option("inputs", draw_inputs, "graph files, - for stdin");
    cdraw->add_option("-o,--output", draw_out, "output file, - for stdout");
    cdraw->add_option("--svg", draw_svg, "also render the realized drawing to SVG");
    cdraw->add_option("--jobs", draw_jobs, "parallel workers for several inputs")
        ->check(CLI::PositiveNumber);

    // realize
    auto* creal = app.add_subcommand("realize", "exact straight-line coordinates");
    std::string real_eps = "1/100";
    std::vector<std::string> real_inputs;
    std::string real_out = "-";
    int real_jobs = 1;
    creal->add_option("--epsilon", real_eps, "total width of the drawing");
    creal->add_option("inputs", real_inputs, "level drawing files, - for stdin");
    creal->add_option("-o,--output", real_out, "output file, - for stdout");
    creal->add_option("--jobs", real_jobs, "parallel workers for several inputs")
        ->check(CLI::PositiveNumber);

    // check
    auto* ccheck = app.add_subcommand("check", "verify drawings with exact arithmetic");
    std::vector<std::string> check_inputs;
    check_flags cf;
    int check_jobs = 1;
    ccheck->add_option("inputs", check_inputs, "drawing files, - for stdin");
    ccheck->add_option("--graph", cf.graph_path, "expected graph file");
    ccheck->add_option("--span", cf.span, "maximum allowed span (leveled drawings)");
    ccheck->add_option("--ratio", cf.ratio, "global edge-length ratio bound, e.g. 3.01");
    ccheck->add_flag("--perimeter", cf.perimeter,
                     "verify triangle perimeter growth of a chain drawing");
    ccheck->add_option("--jobs", check_jobs, "parallel workers for several inputs")
        ->check(CLI::PositiveNumber);

    // lower
    auto* clower = app.add_subcommand("lower", "local-ratio optimizer on the chain family");
    int low_k = 80, low_restarts = 32, low_iters = 20000;
    std::uint64_t low_seed = 1;
    std::string low_csv, low_out;
    clower->add_option("--k", low_k, "chain length")->check(CLI::PositiveNumber);
    clower->add_option("--restarts", low_restarts)->check(CLI::PositiveNumber);
    clower->add_option("--iters", low_iters)->check(CLI::PositiveNumber);
    auto* low_seed_opt = clower->add_option("--seed", low_seed, "optimizer seed");
    clower->add_option("--csv", low_csv, "write per-restart results as CSV");
    clower->add_option("-o,--output", low_out, "write the best drawing found");

    // svg
    auto* csvg = app.add_subcommand("svg", "render a drawing file to SVG");
    std::vector<std::string> svg_inputs;
    std::string svg_out = "-";
    double svg_scale = 60.0;
    int svg_jobs = 1;
    csvg->add_option("inputs", svg_inputs, "drawing files, - for stdin");
    csvg->add_option("-o,--output", svg_out, "output file, - for stdout");
    csvg->add_option("--scale", svg_scale, "pixels per level");
    csvg->add_option("--jobs", svg_jobs, "parallel workers for several inputs")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 3;
    }

    if (app.got_subcommand(cgen))
        return guarded([&] {
            std::uint64_t seed = gen_seed_opt->count() ? gen_seed : env_seed();
            json params = json::object();
            plane_graph g = generate(gen_family, gen_size, gen_k, seed, params);
            json j = graph_to_json(g);
            j["family"] = gen_family;
            run_manifest m;
            m.command = "gen";
            m.parameters = params;
            m.seed = seed;
            j["manifest"] = m.to_json();
            spit(gen_out, dump(j));
            return 0;
        });

    if (app.got_subcommand(cdraw)) {
        bool batch = draw_inputs.size() > 1;
        if (batch && (draw_out != "-" || !draw_svg.empty())) {
            std::cerr << "error: with several inputs, outputs are named after them\n";
            return 3;
        }
        return for_each_input(draw_inputs, draw_jobs, [&](const std::string& input,
                                                          bool derived) {
            std::string bytes = slurp(input);
            json in = json::parse(bytes);
            plane_graph g = graph_from_json(in);
            level_drawing d = draw_dispatch(g, draw_algo, in);
            json j = level_drawing_to_json(d);
            run_manifest m;
            m.command = "draw";
            m.parameters = {{"algorithm", draw_algo}};
            m.input_hash = content_hash(bytes);
            j["manifest"] = m.to_json();
            spit(derived ? derived_name(input, ".drawing.json") : draw_out, dump(j));
            if (!draw_svg.empty())
                spit(draw_svg, render_svg(realize_straight_line(d, rat(1, 100))));
            return 0;
        });
    }

    if (app.got_subcommand(creal)) {
        if (real_inputs.size() > 1 && real_out != "-") {
            std::cerr << "error: with several inputs, outputs are named after them\n";
            return 3;
        }
        return for_each_input(real_inputs, real_jobs, [&](const std::string& input,
                                                          bool derived) {
            std::string bytes = slurp(input);
            rat eps = parse_rat(real_eps);
            level_drawing d = level_drawing_from_json(json::parse(bytes));
            bool doubled = audit_span(d).count(0) > 0;
            if (doubled) d = double_levels(d);
            straight_line_drawing sl = realize_straight_line(d, eps);
            json j = straight_line_to_json(sl);
            run_manifest m;
            m.command = "realize";
            m.parameters = {{"epsilon", format_rat(eps)}, {"doubled", doubled}};
            m.input_hash = content_hash(bytes);
            j["manifest"] = m.to_json();
            spit(derived ? derived_name(input, ".straight.json") : real_out, dump(j));
            return 0;
        });
    }

    if (app.got_subcommand(ccheck))
        return for_each_input(check_inputs, check_jobs, [&](const std::string& input,
                                                            bool batch) {
            json j = json::parse(slurp(input));
            std::ostringstream log;
            int rc = check_one(j, cf, log);
            std::ostringstream out;
            std::istringstream lines(log.str());
            for (std::string line; std::getline(lines, line);) {
                if (batch) out << input << ": ";
                out << line << "\n";
            }
#pragma omp critical
            std::cout << out.str() << std::flush;
            return rc;
        });

    if (app.got_subcommand(clower))
        return guarded([&] {
            std::uint64_t seed = low_seed_opt->count() ? low_seed : env_seed();
            lower_bound_chain ch = gen_lower_bound_chain(low_k);
            optimize_result res =
                optimize_local_ratio(ch.graph, low_restarts, low_iters, seed);
            double floor_bound = std::sqrt(low_k / 20.0);
            std::ostringstream out;
            out << "k=" << low_k << " n=" << ch.graph.n() << " restarts=" << low_restarts
                << " iters=" << low_iters << " seed=" << seed << "\n";
            out << "best_rho_local=" << res.best_rho_local << " (restart "
                << res.best_restart << ")\n";
            out << "proved_floor=sqrt(k/20)=" << floor_bound << "\n";
            out << "gap=" << res.best_rho_local - floor_bound << "\n";
            std::cout << out.str();
            if (!low_csv.empty()) {
                std::ostringstream csv;
                csv << "restart,rho_local\n";
                for (std::size_t i = 0; i < res.restart_best.size(); ++i)
                    csv << i << "," << res.restart_best[i] << "\n";
                spit(low_csv, csv.str());
            }
            if (!low_out.empty()) {
                json j = straight_line_to_json(res.best);
                run_manifest m;
                m.command = "lower";
                m.parameters = {{"k", low_k},
                                {"restarts", low_restarts},
                                {"iters", low_iters}};
                m.seed = seed;
                j["manifest"] = m.to_json();
                spit(low_out, dump(j));
            }
            return 0;
        });

    if (app.got_subcommand(csvg)) {
        if (svg_inputs.size() > 1 && svg_out != "-") {
            std::cerr << "error: with several inputs, outputs are named after them\n";
            return 3;
        }
        return for_each_input(svg_inputs, svg_jobs, [&](const std::string& input,
                                                        bool derived) {
            json j = json::parse(slurp(input));
            straight_line_drawing sl;
            if (j.contains("coords"))
                sl = straight_line_from_json(j);
            else
                sl = realize_straight_line(level_drawing_from_json(j), rat(1, 100));
            spit(derived ? derived_name(input, ".svg") : svg_out,
                 render_svg(sl, svg_scale));
            return 0;
        });
    }

    return 3;
}
