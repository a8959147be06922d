#include "cci/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cci/radio.hpp"
#include "cci/reference.hpp"

namespace cci {

namespace {

// Thin wrapper making the draw sequence explicit and portable: doubles come
// from the top 53 bits of the engine output.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) { return eng() % n; }
};

} // namespace

Network generate_random_network(const GenConfig& cfg) {
    if (cfg.v < 2) throw std::invalid_argument("generate_random_network: need at least 2 nodes");
    if (cfg.e < 1) throw std::invalid_argument("generate_random_network: need at least 1 link");
    if (cfg.d < 1) throw std::invalid_argument("generate_random_network: degree cap must be >= 1");
    if (static_cast<std::uint64_t>(cfg.e) * 2 > static_cast<std::uint64_t>(cfg.v) * cfg.d)
        throw std::invalid_argument("generate_random_network: e exceeds v*d/2");
    if (!(cfg.area_m > 0.0)) throw std::invalid_argument("generate_random_network: area must be positive");

    Rng rng(cfg.seed);
    Network net;

    // Nodes: uniform in the square, with a soft minimum separation so that
    // interference kernels stay finite and well-scaled.
    const double min_sep = cfg.area_m / 100.0;
    for (std::uint32_t i = 0; i < cfg.v; ++i) {
        Vec2 pos{};
        for (int attempt = 0; attempt < 1000; ++attempt) {
            pos = {rng.uniform() * cfg.area_m, rng.uniform() * cfg.area_m};
            bool ok = true;
            for (const Node& n : net.nodes) {
                if (!n.antennas.empty() && distance(n.antennas[0].position, pos) < min_sep) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        Node n;
        n.id = i;
        // Antenna 0 marks the node's site; links add boresighted antennas.
        n.antennas.push_back(Antenna{pos, 0.0, cfg.radio.beamwidth_w});
        net.nodes.push_back(std::move(n));
    }

    // Candidate pairs sorted by distance; a thinning walk over that order
    // prefers short links while staying seed-dependent.
    struct Pair {
        double dist;
        NodeId a, b;
    };
    std::vector<Pair> pool;
    for (NodeId a = 0; a < cfg.v; ++a)
        for (NodeId b = a + 1; b < cfg.v; ++b)
            pool.push_back({distance(net.nodes[a].antennas[0].position,
                                     net.nodes[b].antennas[0].position),
                            a, b});
    std::sort(pool.begin(), pool.end(), [](const Pair& p, const Pair& q) {
        if (p.dist != q.dist) return p.dist < q.dist;
        return std::make_pair(p.a, p.b) < std::make_pair(q.a, q.b);
    });

    std::vector<std::uint32_t> degree(cfg.v, 0);
    std::vector<char> taken(pool.size(), 0);
    const int max_passes = 64;
    int pass = 0;
    while (net.links.size() < cfg.e) {
        if (++pass > max_passes)
            throw std::runtime_error("generate_random_network: cannot place requested links under the degree cap");
        bool progress = false;
        for (std::size_t pi = 0; pi < pool.size() && net.links.size() < cfg.e; ++pi) {
            if (taken[pi]) continue;
            const Pair& p = pool[pi];
            if (degree[p.a] >= cfg.d || degree[p.b] >= cfg.d) continue;
            if (rng.uniform() >= 0.5) continue; // thinning keeps layouts varied
            taken[pi] = 1;
            ++degree[p.a];
            ++degree[p.b];
            progress = true;

            const bool flip = rng.below(2) == 1;
            const NodeId src = flip ? p.b : p.a;
            const NodeId dst = flip ? p.a : p.b;
            const Vec2 src_pos = net.nodes[src].antennas[0].position;
            const Vec2 dst_pos = net.nodes[dst].antennas[0].position;

            Link l;
            l.id = static_cast<LinkId>(net.links.size());
            l.source = src;
            l.target = dst;
            net.nodes[src].antennas.push_back(
                Antenna{src_pos, bearing(src_pos, dst_pos), cfg.radio.beamwidth_w});
            l.source_antenna = static_cast<std::uint32_t>(net.nodes[src].antennas.size() - 1);
            net.nodes[dst].antennas.push_back(
                Antenna{dst_pos, bearing(dst_pos, src_pos), cfg.radio.beamwidth_w});
            l.target_antenna = static_cast<std::uint32_t>(net.nodes[dst].antennas.size() - 1);
            l.frequency_hz = cfg.radio.frequency_hz;
            l.bandwidth_hz = cfg.radio.bandwidth_hz;
            l.tx_directivity = cfg.radio.tx_directivity;
            l.rx_directivity = cfg.radio.rx_directivity;
            l.max_power_w = cfg.radio.max_power_w;
            l.noise_w = cfg.radio.noise_w;
            net.links.push_back(l);
        }
        if (!progress) {
            // A full pass placed nothing: either saturated (error) or pure
            // thinning misses (retry); distinguish by checking feasibility.
            bool feasible = false;
            for (std::size_t pi = 0; pi < pool.size(); ++pi) {
                if (!taken[pi] && degree[pool[pi].a] < cfg.d && degree[pool[pi].b] < cfg.d) {
                    feasible = true;
                    break;
                }
            }
            if (!feasible)
                throw std::runtime_error("generate_random_network: degree cap saturated before placing all links");
        }
    }

    return net;
}

Network derive_interference_edges(const Network& net, double sir_threshold) {
    if (!is_single_frequency(net))
        throw std::invalid_argument("derive_interference_edges: network must be single-frequency");

    Network out = net;
    out.red_edges.clear();

    const std::int64_t n = static_cast<std::int64_t>(net.links.size());
    std::vector<std::vector<InterferenceEdge>> per_victim(net.links.size());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const Link& victim = net.links[static_cast<std::size_t>(i)];
        const Antenna& rx = rx_antenna(net, victim);
        const double signal = friis_received_power(victim.max_power_w, victim.rx_directivity,
                                                   victim.tx_directivity,
                                                   link_distance(net, victim),
                                                   victim.frequency_hz);
        for (const Link& base : net.links) {
            if (base.id == victim.id) continue;
            const Vec2 tx_pos = tx_antenna(net, base).position;
            if (tx_pos == rx.position) continue; // kernel singular: skip co-sited pair
            const double inter = interference_power_at(rx, tx_pos, base.max_power_w);
            if (inter <= 0.0) continue;
            if (signal / inter < sir_threshold) {
                InterferenceEdge r;
                r.base = base.id;
                r.victim = victim.id;
                r.victim_node = victim.target;
                per_victim[static_cast<std::size_t>(i)].push_back(r);
            }
        }
    }

    // Stitch per-victim results in victim order: identical to the serial walk.
    for (auto& group : per_victim) {
        for (InterferenceEdge& r : group) {
            r.id = static_cast<RedEdgeId>(out.red_edges.size());
            out.red_edges.push_back(r);
        }
    }
    return out;
}

} // namespace cci
