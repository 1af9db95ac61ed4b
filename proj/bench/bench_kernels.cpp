// serial-vs-parallel timing for the two OpenMP kernels: the exact planarity
// audit and the optimizer restart loop; both must agree bit-for-bit
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "elr/families.hpp"
#include "elr/halin.hpp"
#include "elr/io.hpp"
#include "elr/metrics.hpp"

using namespace elr;

namespace {

template <class F>
double ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.1f %10.1f %8.2fx   %s\n", name.c_str(), serial, parallel,
                serial / (parallel > 0 ? parallel : 1e-9), agree ? "agree" : "DISAGREE");
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial/ms", "parallel/ms", "speedup");

    for (int n : {120, 240, 480}) {
        auto h = recognize_halin(gen_random_halin(n, 42));
        auto sl = realize_straight_line(double_levels(draw_halin(h)), rat(1, 100));
        planarity_verdict vs, vp;
        double ts = ms([&] { vs = check_planar_straight_line_serial(sl); });
        double tp = ms([&] { vp = check_planar_straight_line(sl); });
        bool agree = vs.planar == vp.planar && vs.violations.size() == vp.violations.size();
        row("planarity audit n=" + std::to_string(n), ts, tp, agree);
    }

    for (int k : {6, 12}) {
        auto ch = gen_lower_bound_chain(k);
        int restarts = omp_get_max_threads(), iters = 1500;
        optimize_result rs, rp;
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        double ts = ms([&] { rs = optimize_local_ratio(ch.graph, restarts, iters, 7); });
        omp_set_num_threads(saved);
        double tp = ms([&] { rp = optimize_local_ratio(ch.graph, restarts, iters, 7); });
        bool agree = rs.best_rho_local_sq == rp.best_rho_local_sq &&
                     rs.best_restart == rp.best_restart;
        row("optimizer restarts k=" + std::to_string(k), ts, tp, agree);
    }
    return 0;
}
