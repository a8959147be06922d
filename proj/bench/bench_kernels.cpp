// Timing harness for the OpenMP kernels against their serial references.
// Prints one row per kernel with the best-of-N times, the speedup, and the
// largest deviation between the two implementations (expected: zero).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cci/coloring.hpp"
#include "cci/generator.hpp"
#include "cci/power.hpp"
#include "cci/reference.hpp"
#include "cci/threads.hpp"

using namespace cci;

namespace {

template <typename Fn>
double best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count());
    }
    return best;
}

void row(const char* kernel, double serial_s, double parallel_s, double max_diff) {
    std::printf("%-24s %12.6f %12.6f %9.2fx %12.3e\n", kernel, serial_s, parallel_s,
                serial_s / parallel_s, max_diff);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    std::uint32_t links = 600;
    std::uint64_t seed = 1;
    int repeats = 5;
    app.add_option("--links", links, "links in the benchmark network")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--repeats", repeats, "timing repeats (best-of)")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    const int cap = apply_thread_env();

    GenConfig cfg;
    cfg.v = links;
    cfg.e = links;
    cfg.d = 6;
    cfg.seed = seed;
    cfg.area_m = 2000.0 * std::sqrt(links / 100.0);
    const Network base = generate_random_network(cfg);
    const Network net = derive_interference_edges(base, 300.0);

    const QueueSchedule q = dependent_edge_coloring(net);
    const InterferenceBudget budget = budget_from_ratio(net, 100.0);

    std::printf("network: %zu links, %zu red edges, %d slots, threads %s\n", net.links.size(),
                net.red_edges.size(), q.num_slots,
                cap == 0 ? "auto" : std::to_string(cap).c_str());
    std::printf("%-24s %12s %12s %9s %12s\n", "kernel", "serial s", "parallel s", "speedup",
                "max |diff|");

    // derive_interference_edges
    {
        std::vector<InterferenceEdge> ser;
        Network par;
        const double ts = best_of(repeats, [&] { ser = serial::derive_interference_edges(base, 300.0); });
        const double tp = best_of(repeats, [&] { par = derive_interference_edges(base, 300.0); });
        double diff = par.red_edges.size() == ser.size() ? 0.0 : 1.0;
        if (diff == 0.0)
            for (std::size_t i = 0; i < ser.size(); ++i)
                if (par.red_edges[i].base != ser[i].base || par.red_edges[i].victim != ser[i].victim)
                    diff = 1.0;
        row("derive_red_edges", ts, tp, diff);
    }

    // build_power_table
    PowerTable table;
    {
        PowerTable ser;
        const double ts = best_of(repeats, [&] { ser = serial::build_power_table(net, q, budget); });
        const double tp = best_of(repeats, [&] { table = build_power_table(net, q, budget); });
        double diff = 0.0;
        for (std::size_t i = 0; i < ser.power.size(); ++i)
            diff = std::max(diff, std::abs(ser.power[i] - table.power[i]));
        row("build_power_table", ts, tp, diff);
    }

    // network_capacity
    {
        double ser = 0.0, par = 0.0;
        const double ts = best_of(repeats, [&] { ser = serial::network_capacity(net, q, table); });
        const double tp = best_of(repeats, [&] { par = network_capacity(net, q, table); });
        row("network_capacity", ts, tp, std::abs(ser - par));
    }

    return 0;
}
