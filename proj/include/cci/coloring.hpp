#pragma once

#include <vector>

#include "cci/model.hpp"

namespace cci {

// Dependency graph over links: one vertex per link, one (undirected) edge per
// distinct interfering link pair. Adjacency lists are sorted ascending.
struct DependencyGraph {
    std::vector<std::vector<LinkId>> adj;
    std::size_t edge_count = 0;

    std::size_t max_degree() const;
};

DependencyGraph build_dependency_graph(const Network& net);

// Greedy smallest-available-color over vertices in ascending id order.
// Uses at most max_degree()+1 colors; the palette is dense and 0-based.
std::vector<int> greedy_vertex_color(const DependencyGraph& g);

// Per-link priority slot assignment. label[l] is link l's slot; num_slots is
// 1 + max label (or 1 for an interference-free network).
struct QueueSchedule {
    std::vector<int> label;
    int num_slots = 1;
};

QueueSchedule dependent_edge_coloring(const Network& net);

// True iff no two links joined by a red edge share a slot and every label is
// within [0, num_slots).
bool verify_legal_queue(const Network& net, const QueueSchedule& q);

} // namespace cci
