#pragma once

// Hand-built networks with frozen expected values. All constants below were
// recomputed independently (high-precision arithmetic outside this codebase)
// and are asserted against the library, not derived from it.

#include <cstdint>
#include <vector>

#include "cci/generator.hpp"
#include "cci/model.hpp"

namespace fx {

// --- star: one short crushed link e0, four interferers aimed across its
// receiver. The interferers' own receivers sit 25 km away, so their links run
// at SNR ~0.91 and are cheap to throttle; e0 gains hugely from protection.
namespace star {

inline constexpr double frequency_hz = 1e9;
inline constexpr double bandwidth_hz = 1e6;
inline constexpr double noise_w = 1e-12;
inline constexpr double max_power_w = 1.0;

// coupling z(theta)/(4 pi d^2) of red edge i (base link i+1, victim e0)
inline constexpr double coupling[4] = {1.737719185490714e-07, 3.294013737294233e-09,
                                       1.5905556072819085e-07, 6.950876741962856e-07};
// Friis received power at P_max: e0 (300 m) and the interferer links (25 km)
inline constexpr double signal_e0_w = 6.3238151746038346e-09;
inline constexpr double signal_far_w = 9.10629385142952e-13;
// sum of couplings = interference at e0 with every base at P_max
inline constexpr double full_interference_w = 1.031209167210842e-06;
// e0's full-power SIR, the minimum over victims (x1 of the ratio bracket)
inline constexpr double min_full_power_sir = 0.0061324272278417994;
// single-slot all-P_max evaluation
inline constexpr double baseline_capacity_bps = 3745012.0299019357;
// two-slot dynamic table at ratio x=100
inline constexpr double treated_capacity_bps = 5193692.89539493;
// reduced powers of links e1..e4 in e0's priority slot at x=100
inline constexpr double slot0_reduced_w[4] = {9.097866944505845e-05, 0.004799475411264025,
                                              9.939632329816131e-05, 2.2744667361264613e-05};
// capacity after moving e0 to a frequency of its own
inline constexpr double split_capacity_bps = 16362999.439430067;

} // namespace star

inline cci::Network star_network() {
    using cci::Vec2;
    const Vec2 tx[5] = {{-300.0, 0.0},
                        {-200.0, 200.0},
                        {0.0, 150.0},
                        {-75.0, 129.9038105676658},
                        {-100.0, -100.0}};
    const Vec2 rx[5] = {{0.0, 0.0},
                        {-17877.669529663686, 17877.669529663686},
                        {0.0, 25150.0},
                        {-12575.0, 21780.538905178633},
                        {-17777.669529663686, -17777.669529663686}};

    cci::Network net;
    for (std::uint32_t i = 0; i < 5; ++i) {
        cci::Node a, b;
        a.id = 2 * i;
        b.id = 2 * i + 1;
        a.antennas.push_back({tx[i], cci::bearing(tx[i], rx[i]), 1.0});
        b.antennas.push_back({rx[i], cci::bearing(rx[i], tx[i]), 1.0});
        net.nodes.push_back(a);
        net.nodes.push_back(b);

        cci::Link l;
        l.id = i;
        l.source = 2 * i;
        l.target = 2 * i + 1;
        l.source_antenna = 0;
        l.target_antenna = 0;
        l.frequency_hz = star::frequency_hz;
        l.bandwidth_hz = star::bandwidth_hz;
        l.tx_directivity = 1.0;
        l.rx_directivity = 1.0;
        l.max_power_w = star::max_power_w;
        l.noise_w = star::noise_w;
        net.links.push_back(l);
    }
    for (std::uint32_t i = 1; i < 5; ++i) {
        cci::InterferenceEdge r;
        r.id = i - 1;
        r.base = i;
        r.victim = 0;
        r.victim_node = 1;
        net.red_edges.push_back(r);
    }
    return net;
}

// --- row: m parallel vertical links on a horizontal row, red edges supplied
// explicitly. Geometry is regular; used where only the conflict structure
// matters (coloring, queue legality).
inline cci::Network row_network(std::uint32_t m,
                                const std::vector<std::pair<cci::LinkId, cci::LinkId>>& reds) {
    using cci::Vec2;
    cci::Network net;
    for (std::uint32_t i = 0; i < m; ++i) {
        const Vec2 tx{1000.0 * i, 0.0};
        const Vec2 rx{1000.0 * i, 500.0};
        cci::Node a, b;
        a.id = 2 * i;
        b.id = 2 * i + 1;
        a.antennas.push_back({tx, cci::bearing(tx, rx), 1.0});
        b.antennas.push_back({rx, cci::bearing(rx, tx), 1.0});
        net.nodes.push_back(a);
        net.nodes.push_back(b);

        cci::Link l;
        l.id = i;
        l.source = 2 * i;
        l.target = 2 * i + 1;
        l.source_antenna = 0;
        l.target_antenna = 0;
        l.frequency_hz = 1e9;
        l.bandwidth_hz = 1e6;
        l.tx_directivity = 1.0;
        l.rx_directivity = 1.0;
        l.max_power_w = 1.0;
        l.noise_w = 1e-12;
        net.links.push_back(l);
    }
    for (std::uint32_t i = 0; i < reds.size(); ++i) {
        cci::InterferenceEdge r;
        r.id = i;
        r.base = reds[i].first;
        r.victim = reds[i].second;
        r.victim_node = net.links[r.victim].target;
        net.red_edges.push_back(r);
    }
    return net;
}

// Three links, pairwise conflicting (H is a triangle).
inline cci::Network triangle_network() {
    return row_network(3, {{0, 1}, {1, 2}, {2, 0}});
}

// --- lopsided: base l0 throttles for two victims sharing a slot but with
// different blocker counts (l2 is also hit by l3); exercises the min over
// victim caps in reduced_power.
inline cci::Network lopsided_network() {
    using cci::Vec2;
    struct Span {
        Vec2 tx, rx;
    };
    const Span spans[4] = {
        {{-300.0, 300.0}, {-300.0, 25300.0}},  // l0: first base, long link away
        {{0.0, 1000.0}, {0.0, 0.0}},           // l1: victim, 1 km
        {{1000.0, 1000.0}, {1000.0, 0.0}},     // l2: victim, 1 km
        {{1300.0, 300.0}, {1300.0, 25300.0}},  // l3: second base onto l2
    };

    cci::Network net;
    for (std::uint32_t i = 0; i < 4; ++i) {
        cci::Node a, b;
        a.id = 2 * i;
        b.id = 2 * i + 1;
        a.antennas.push_back({spans[i].tx, cci::bearing(spans[i].tx, spans[i].rx), 1.0});
        b.antennas.push_back({spans[i].rx, cci::bearing(spans[i].rx, spans[i].tx), 1.0});
        net.nodes.push_back(a);
        net.nodes.push_back(b);

        cci::Link l;
        l.id = i;
        l.source = 2 * i;
        l.target = 2 * i + 1;
        l.source_antenna = 0;
        l.target_antenna = 0;
        l.frequency_hz = 1e9;
        l.bandwidth_hz = 1e6;
        l.tx_directivity = 1.0;
        l.rx_directivity = 1.0;
        l.max_power_w = 1.0;
        l.noise_w = 1e-12;
        net.links.push_back(l);
    }
    const std::pair<cci::LinkId, cci::LinkId> reds[3] = {{0, 1}, {0, 2}, {3, 2}};
    for (std::uint32_t i = 0; i < 3; ++i) {
        cci::InterferenceEdge r;
        r.id = i;
        r.base = reds[i].first;
        r.victim = reds[i].second;
        r.victim_node = net.links[r.victim].target;
        net.red_edges.push_back(r);
    }
    return net;
}

// --- unit kernel: victim link 0 with its receiver boresighted straight at
// base transmitters placed so z(theta)=1 and 4*pi*d^2=1; reduced power then
// equals p_min / share directly.
inline cci::Network unit_kernel_network(int bases) {
    using cci::Vec2;
    const double d0 = 0.28209479177387814; // 1 / (2 sqrt(pi))

    cci::Network net;
    auto add_span = [&net](Vec2 tx, Vec2 rx, double rx_boresight, bool use_rx_boresight) {
        const std::uint32_t i = static_cast<std::uint32_t>(net.links.size());
        cci::Node a, b;
        a.id = 2 * i;
        b.id = 2 * i + 1;
        a.antennas.push_back({tx, cci::bearing(tx, rx), 1.0});
        b.antennas.push_back(
            {rx, use_rx_boresight ? rx_boresight : cci::bearing(rx, tx), 1.0});
        net.nodes.push_back(a);
        net.nodes.push_back(b);

        cci::Link l;
        l.id = i;
        l.source = 2 * i;
        l.target = 2 * i + 1;
        l.source_antenna = 0;
        l.target_antenna = 0;
        l.frequency_hz = 1e9;
        l.bandwidth_hz = 1e6;
        l.tx_directivity = 1.0;
        l.rx_directivity = 1.0;
        l.max_power_w = 1.0;
        l.noise_w = 1e-12;
        net.links.push_back(l);
    };

    // victim: receiver at origin staring along +x (at the first base)
    add_span({-1000.0, 0.0}, {0.0, 0.0}, 0.0, true);
    // first base dead on boresight at the unit-denominator distance
    add_span({d0, 0.0}, {d0, 25000.0}, 0.0, false);
    if (bases > 1) add_span({0.0, 300.0}, {0.0, 25300.0}, 0.0, false);

    for (int i = 1; i <= bases; ++i) {
        cci::InterferenceEdge r;
        r.id = static_cast<cci::RedEdgeId>(i - 1);
        r.base = static_cast<cci::LinkId>(i);
        r.victim = 0;
        r.victim_node = 1;
        net.red_edges.push_back(r);
    }
    return net;
}

// --- two frequencies: two red-coupled pairs, one pair per carrier.
inline cci::Network two_freq_network() {
    cci::Network net = row_network(4, {{0, 1}, {2, 3}});
    net.links[2].frequency_hz = 2e9;
    net.links[3].frequency_hz = 2e9;
    return net;
}

// Generated network with red edges derived from geometry.
inline cci::Network random_net(std::uint64_t seed, std::uint32_t v, std::uint32_t e,
                               std::uint32_t d, double sir = 100.0, double area = 2000.0) {
    cci::GenConfig cfg;
    cfg.v = v;
    cfg.e = e;
    cfg.d = d;
    cfg.seed = seed;
    cfg.area_m = area;
    return cci::derive_interference_edges(cci::generate_random_network(cfg), sir);
}

} // namespace fx
