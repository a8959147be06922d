#pragma once

#include <cstdint>

#include "cci/model.hpp"

namespace cci {

// Radio parameters stamped on every generated link.
struct RadioDefaults {
    double frequency_hz = 6e9;
    double bandwidth_hz = 2e7;
    double max_power_w = 1.0;
    double noise_w = 1e-13;
    double tx_directivity = 1000.0;
    double rx_directivity = 1000.0;
    double beamwidth_w = 1.0;
};

struct GenConfig {
    std::uint32_t v = 2;       // node count
    std::uint32_t e = 1;       // link count
    std::uint32_t d = 1;       // max node degree
    std::uint64_t seed = 0;
    double area_m = 2000.0;    // square side
    RadioDefaults radio;
};

// v nodes uniform in the square, e links sampled preferring short node pairs
// under the degree cap, antennas boresighted along their link. Deterministic
// per seed. Throws std::invalid_argument on bad config and std::runtime_error
// when e links cannot be placed.
Network generate_random_network(const GenConfig& cfg);

// Copy of `net` with red edges derived from geometry: (base=a, victim=b)
// whenever the victim's full-power SIR against a alone falls below
// sir_threshold. Requires a single-frequency input. This is the parallel
// kernel (see cci::serial for the reference).
Network derive_interference_edges(const Network& net, double sir_threshold);

} // namespace cci
