#pragma once

#include <cstdint>
#include <vector>

#include "cci/coloring.hpp"
#include "cci/model.hpp"
#include "cci/power.hpp"

namespace cci {

// The surrounding set U of a link e inside one frequency subgraph:
//   contesting_red  - red edges victimizing e's receiver
//   effects         - red edges caused by e
//   contesting_bases- the base links of contesting_red
// Ids are local to the subgraph, ascending, deduplicated.
struct Surrounding {
    std::vector<RedEdgeId> contesting_red;
    std::vector<RedEdgeId> effects;
    std::vector<LinkId> contesting_bases;
};

Surrounding surrounding_set(const Network& subgraph, LinkId link);

// A black or red edge for the signed average-power accessor.
struct EdgeRef {
    enum Kind { black, red } kind = black;
    std::uint32_t id = 0;

    static EdgeRef black_edge(LinkId l) { return {black, l}; }
    static EdgeRef red_edge(RedEdgeId r) { return {red, r}; }
};

// P_Q(e): black edge -> mean transmit power over the queue; red edge -> minus
// the mean interference its base couples into the victim's receiver.
double avg_queue_power(EdgeRef edge, const Network& net, const QueueSchedule& q,
                       const PowerTable& table);

struct PgEntry {
    LinkId link = 0;  // parent link id
    double pg_g1 = 0.0;
    double pg_g2 = 0.0;
    double pg = 0.0;  // pg_g1 + pg_g2
};

struct PlannerConfig {
    double ratio_x = 100.0;   // allowed-interference ratio for power tables
    double pg_eps_rel = 1e-9; // pg below eps_rel * max P_max counts as zero
};

// Scheduling state of one frequency partition: which parent links belong to
// it plus the derived queue, budget and dynamic table (indexed by position in
// `members`, which is sorted ascending).
struct SubgraphState {
    std::vector<LinkId> members;
    QueueSchedule schedule;
    InterferenceBudget budget;
    PowerTable table;
};

// Rebuilds schedule/budget/table of a partition of `parent` from its members.
SubgraphState make_state(const Network& parent, std::vector<LinkId> members, double ratio_x);

// Power gain of moving parent link e from partition g1 to g2:
// pg_g1 = -P_Q(e) + sum over U_G1 of (P_Q1 - P_Q), with Q1 the queue of g1
// without e; pg_g2 = +P_Q2(e) + sum over U_G2 of (P_Q2 - P_Q'), with Q' the
// queue of g2 before e joins. Touches only the U neighborhoods plus the two
// recolorings.
PgEntry power_gain(const Network& parent, const SubgraphState& g1,
                   const SubgraphState& g2, LinkId e, const PlannerConfig& cfg);

struct SplitResult {
    SubgraphState g1;
    SubgraphState g2;
    std::vector<LinkId> migrated; // parent link ids in migration order
};

// Greedy migration of positive-PG links to a new frequency; stops when no
// remaining g1 link has pg > 0. Throws std::invalid_argument if net spans
// multiple frequencies.
SplitResult assign_new_frequency(const Network& net, const PlannerConfig& cfg);

struct FrequencyPlan {
    std::vector<int> assignments;                       // frequency index per parent link
    std::vector<SubgraphState> states;                  // one per frequency index
    std::vector<std::pair<int, double>> profit_trace;   // (frequency count, total capacity)
};

// Adds frequencies while each split improves total capacity by more than
// profit_threshold (bit/s), splitting the partition with the largest positive
// PG mass, up to max_freqs.
FrequencyPlan plan_frequencies(const Network& net, const PlannerConfig& cfg,
                               double profit_threshold, int max_freqs);

// Total capacity of a plan: sum of partition capacities.
double plan_capacity(const Network& net, const FrequencyPlan& plan);

} // namespace cci
