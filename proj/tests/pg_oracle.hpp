#pragma once

// Wholesale power-gain oracle: rebuild both partitions from scratch before and
// after a move and difference the average queue powers over the affected
// neighborhood {e} u U(e). Double-checks the planner's incremental engine.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cci/coloring.hpp"
#include "cci/model.hpp"
#include "cci/planner.hpp"
#include "cci/power.hpp"

namespace fx {

struct PartitionView {
    cci::FrequencySubgraph sub;
    cci::QueueSchedule q;
    cci::PowerTable table;
};

inline PartitionView build_view(const cci::Network& parent, std::vector<cci::LinkId> members,
                                double ratio_x) {
    std::sort(members.begin(), members.end());
    PartitionView v;
    v.sub = cci::make_subgraph(parent, {members.begin(), members.end()});
    v.q = cci::dependent_edge_coloring(v.sub.network);
    const auto budget = cci::budget_from_ratio(v.sub.network, ratio_x);
    v.table = cci::build_power_table(v.sub.network, v.q, budget);
    return v;
}

// Average queue power of a parent-level edge inside the view; 0 when the edge
// does not survive into the partition.
inline double avg_in(const PartitionView& v, cci::EdgeRef parent_edge) {
    if (parent_edge.kind == cci::EdgeRef::black) {
        const auto& lo = v.sub.link_origin;
        const auto it = std::lower_bound(lo.begin(), lo.end(),
                                         static_cast<std::size_t>(parent_edge.id));
        if (it == lo.end() || *it != parent_edge.id) return 0.0;
        const auto local = static_cast<cci::LinkId>(it - lo.begin());
        return cci::avg_queue_power(cci::EdgeRef::black_edge(local), v.sub.network, v.q, v.table);
    }
    for (std::size_t i = 0; i < v.sub.red_origin.size(); ++i)
        if (v.sub.red_origin[i] == parent_edge.id)
            return cci::avg_queue_power(cci::EdgeRef::red_edge(static_cast<cci::RedEdgeId>(i)),
                                        v.sub.network, v.q, v.table);
    return 0.0;
}

// Power gain of moving e from g1 to g2, recomputed wholesale.
inline double brute_force_pg(const cci::Network& parent,
                             const std::vector<cci::LinkId>& g1_members,
                             const std::vector<cci::LinkId>& g2_members, cci::LinkId e,
                             double ratio_x) {
    const auto u = cci::surrounding_set(parent, e);
    std::vector<cci::EdgeRef> hood;
    hood.push_back(cci::EdgeRef::black_edge(e));
    for (auto r : u.contesting_red) hood.push_back(cci::EdgeRef::red_edge(r));
    for (auto r : u.effects) hood.push_back(cci::EdgeRef::red_edge(r));
    for (auto b : u.contesting_bases) hood.push_back(cci::EdgeRef::black_edge(b));

    std::vector<cci::LinkId> g1_after = g1_members;
    g1_after.erase(std::remove(g1_after.begin(), g1_after.end(), e), g1_after.end());
    std::vector<cci::LinkId> g2_after = g2_members;
    g2_after.push_back(e);

    const PartitionView b1 = build_view(parent, g1_members, ratio_x);
    const PartitionView a1 = build_view(parent, g1_after, ratio_x);
    const PartitionView b2 = build_view(parent, g2_members, ratio_x);
    const PartitionView a2 = build_view(parent, g2_after, ratio_x);

    double pg = 0.0;
    for (const auto ref : hood)
        pg += (avg_in(a1, ref) - avg_in(b1, ref)) + (avg_in(a2, ref) - avg_in(b2, ref));
    return pg;
}

} // namespace fx
