#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cci/coloring.hpp"
#include "cci/model.hpp"

namespace cci {

// Per-victim interference cap in watts, indexed by link id.
struct InterferenceBudget {
    std::vector<double> p_min;
};

// p_min[l] = (Friis received power of l at max transmit power) / x.
InterferenceBudget budget_from_ratio(const Network& net, double x);

// For each victim link l, the red edges whose bases must throttle while l
// holds priority. Under a legal schedule every red edge onto l qualifies in
// l's slot (no base shares l's color), and no slot other than L(l) has any
// blockers for l.
struct BlockerSet {
    // members[l] = red-edge ids blocking victim l in its priority slot.
    std::vector<std::vector<RedEdgeId>> members;
    // by_base[l] = red-edge ids among all members caused by link l.
    std::vector<std::vector<RedEdgeId>> by_base;
    std::vector<int> priority_slot; // L(l), parallel to members
    int num_slots = 1;

    // B^j_l: blockers of victim l at slot j (empty unless j == L(l)).
    const std::vector<RedEdgeId>& blockers(LinkId l, int slot) const;
};

BlockerSet blocker_sets(const Network& net, const QueueSchedule& q);

struct ReducedPowerResult {
    double power_w = 0.0;
    bool clamped = false;
    bool has_priority_victim = false;
    std::optional<RedEdgeId> governing_red; // red edge attaining the strictest cap
    std::uint32_t share_count = 0;          // |B| of the governing victim
};

// Power link `interferer` may use in `slot` without breaching any priority
// victim's budget share: the minimum over victims v with L(v) == slot of
// 4*pi*d^2 * p_min(v) / (z(theta) * |B_v|), clamped to P_max; P_max when no
// victim holds priority in the slot.
ReducedPowerResult reduced_power_detail(const Network& net, const QueueSchedule& q,
                                        const BlockerSet& blockers,
                                        const InterferenceBudget& budget,
                                        LinkId interferer, int slot);

double reduced_power(const Network& net, const QueueSchedule& q,
                     const BlockerSet& blockers, const InterferenceBudget& budget,
                     LinkId interferer, int slot);

// Row-major [link][slot] transmit powers in watts.
struct PowerTable {
    std::vector<double> power;
    int num_slots = 1;

    double at(LinkId l, int slot) const {
        return power[static_cast<std::size_t>(l) * static_cast<std::size_t>(num_slots) +
                     static_cast<std::size_t>(slot)];
    }
    double& at(LinkId l, int slot) {
        return power[static_cast<std::size_t>(l) * static_cast<std::size_t>(num_slots) +
                     static_cast<std::size_t>(slot)];
    }
};

// P(e)_j = P_max where L(e) == j, else reduced_power. Slots are independent;
// this is the parallel kernel (see cci::serial for the reference).
PowerTable build_power_table(const Network& net, const QueueSchedule& q,
                             const InterferenceBudget& budget);

// All links at max power in every slot (baseline uses num_slots = 1).
PowerTable uniform_max_power_table(const Network& net, int num_slots);

// SINR of link l in a slot: Friis signal at the slot power over noise plus
// the sum of red-edge interference at the slot powers of the bases.
double slot_sinr(const Network& net, const PowerTable& table, LinkId l, int slot);

// Mean over slots of the per-slot sum of link capacities at slot SINR.
double network_capacity(const Network& net, const QueueSchedule& q, const PowerTable& table);

// Per-link share of network_capacity (same slot averaging).
std::vector<double> per_link_capacity(const Network& net, const PowerTable& table);

// Capacity the same table would achieve with interference zeroed (SNR only).
double snr_only_capacity(const Network& net, const PowerTable& table);

// Mean over slots of the summed transmit power (watts); the energy metric.
double mean_cycle_power(const Network& net, const PowerTable& table);

} // namespace cci
