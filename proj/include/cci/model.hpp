#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cci/geometry.hpp"

namespace cci {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;
using RedEdgeId = std::uint32_t;

// A physical radio head mounted on a node. The boresight is the direction of
// maximum gain; beamwidth_w is the width parameter of the reception-pattern
// falloff (the w in rpf_gain).
struct Antenna {
    Vec2 position;
    double boresight_rad = 0.0;
    double beamwidth_w = 1.0;
};

struct Node {
    NodeId id = 0;
    std::vector<Antenna> antennas;
};

// A directed transmission link (black edge). source transmits from
// source_antenna towards target's target_antenna; the receiver lives at the
// target end.
struct Link {
    LinkId id = 0;
    NodeId source = 0;
    NodeId target = 0;
    std::uint32_t source_antenna = 0;
    std::uint32_t target_antenna = 0;
    double frequency_hz = 0.0;
    double bandwidth_hz = 0.0;
    double tx_directivity = 1.0;
    double rx_directivity = 1.0;
    double max_power_w = 0.0;
    double noise_w = 0.0;
};

// A directed interference relation (red edge): transmissions on `base`
// disturb reception on `victim` at victim_node (the victim's receiving
// endpoint).
struct InterferenceEdge {
    RedEdgeId id = 0;
    LinkId base = 0;
    LinkId victim = 0;
    NodeId victim_node = 0;
};

struct Network {
    std::vector<Node> nodes;
    std::vector<Link> links;
    std::vector<InterferenceEdge> red_edges;
};

struct Violation {
    std::string entity; // "node" | "link" | "red_edge" | "network"
    std::uint32_t id = 0;
    std::string rule;
};

// Structural and physical well-formedness. Returns every violation found;
// an empty result means the network is usable by the pipeline.
std::vector<Violation> validate(const Network& net);

bool is_single_frequency(const Network& net);
std::vector<double> frequencies(const Network& net); // distinct, ascending

const Antenna& tx_antenna(const Network& net, const Link& link);
const Antenna& rx_antenna(const Network& net, const Link& link);
double link_distance(const Network& net, const Link& link);

// Red-edge adjacency, indexed by link id; red-edge ids sorted ascending.
struct RedIndex {
    std::vector<std::vector<RedEdgeId>> by_base;
    std::vector<std::vector<RedEdgeId>> by_victim;
};

RedIndex build_red_index(const Network& net);

// delta: max over links of (reds caused by the link + reds contesting it).
std::uint32_t max_interference_degree(const Network& net);

// A frequency slice of a network together with maps from the slice's dense
// ids back to the parent container indices.
struct FrequencySubgraph {
    Network network;
    std::vector<std::size_t> node_origin;
    std::vector<std::size_t> link_origin;
    std::vector<std::size_t> red_origin;
};

// Links with frequency_hz == f_hz, their endpoints, and red edges between
// them, re-densified. Unknown frequency yields an empty subgraph.
FrequencySubgraph subgraph_by_frequency(const Network& net, double f_hz);

// One subgraph per distinct frequency, ascending.
std::vector<FrequencySubgraph> split_by_frequency(const Network& net);

// Subgraph induced by the given parent link indices (ascending). Red edges
// survive only if base and victim both survive.
FrequencySubgraph make_subgraph(const Network& net, const std::vector<std::size_t>& link_indices);

} // namespace cci
