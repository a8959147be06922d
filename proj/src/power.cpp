#include "cci/power.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cci/radio.hpp"

namespace cci {

namespace {

const std::vector<RedEdgeId> empty_blockers;

} // namespace

InterferenceBudget budget_from_ratio(const Network& net, double x) {
    if (!(x > 0.0)) throw std::domain_error("budget_from_ratio: ratio must be positive");
    InterferenceBudget b;
    b.p_min.resize(net.links.size());
    for (const Link& l : net.links) {
        const double received = friis_received_power(l.max_power_w, l.rx_directivity,
                                                     l.tx_directivity, link_distance(net, l),
                                                     l.frequency_hz);
        b.p_min[l.id] = received / x;
    }
    return b;
}

const std::vector<RedEdgeId>& BlockerSet::blockers(LinkId l, int slot) const {
    if (l < priority_slot.size() && priority_slot[l] == slot) return members[l];
    return empty_blockers;
}

BlockerSet blocker_sets(const Network& net, const QueueSchedule& q) {
    BlockerSet bs;
    bs.members.resize(net.links.size());
    bs.by_base.resize(net.links.size());
    bs.priority_slot = q.label;
    bs.num_slots = q.num_slots;
    for (const InterferenceEdge& r : net.red_edges) {
        // In the victim's priority slot every base with a different label
        // must throttle; under a legal queue that is every base.
        if (q.label[r.base] != q.label[r.victim]) {
            bs.members[r.victim].push_back(r.id);
            bs.by_base[r.base].push_back(r.id);
        }
    }
    return bs;
}

ReducedPowerResult reduced_power_detail(const Network& net, const QueueSchedule& q,
                                        const BlockerSet& blockers,
                                        const InterferenceBudget& budget,
                                        LinkId interferer, int slot) {
    const Link& b = net.links.at(interferer);
    ReducedPowerResult res;
    res.power_w = b.max_power_w;

    if (q.label[interferer] == slot) return res; // priority: not reduced

    const Antenna& tx = tx_antenna(net, b);
    double best_cap = std::numeric_limits<double>::infinity();

    for (RedEdgeId ri : blockers.by_base[interferer]) {
        const InterferenceEdge& r = net.red_edges[ri];
        const Link& victim = net.links[r.victim];
        if (q.label[r.victim] != slot) continue; // victim not on priority now
        const auto& share = blockers.blockers(r.victim, slot);
        if (share.empty()) continue;
        const Antenna& rx = rx_antenna(net, victim);
        const double d = distance(tx.position, rx.position);
        const double theta = angle_of_reception(rx, tx.position);
        const double z = rpf_gain(theta, rx.beamwidth_w);
        const double cap = 4.0 * std::numbers::pi * d * d * budget.p_min[r.victim] /
                           (z * static_cast<double>(share.size()));
        res.has_priority_victim = true;
        if (cap < best_cap) {
            best_cap = cap;
            res.governing_red = r.id;
            res.share_count = static_cast<std::uint32_t>(share.size());
        }
    }

    if (res.has_priority_victim) {
        if (best_cap >= b.max_power_w) {
            res.power_w = b.max_power_w;
            res.clamped = true;
        } else {
            res.power_w = best_cap;
        }
    }
    return res;
}

double reduced_power(const Network& net, const QueueSchedule& q,
                     const BlockerSet& blockers, const InterferenceBudget& budget,
                     LinkId interferer, int slot) {
    return reduced_power_detail(net, q, blockers, budget, interferer, slot).power_w;
}

PowerTable build_power_table(const Network& net, const QueueSchedule& q,
                             const InterferenceBudget& budget) {
    PowerTable t;
    t.num_slots = q.num_slots;
    t.power.assign(net.links.size() * static_cast<std::size_t>(q.num_slots), 0.0);

    const BlockerSet bs = blocker_sets(net, q);
    const std::int64_t n = static_cast<std::int64_t>(net.links.size());

    // Entries are independent; identical arithmetic regardless of schedule.
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const LinkId l = static_cast<LinkId>(i);
        for (int j = 0; j < q.num_slots; ++j) {
            t.at(l, j) = q.label[l] == j
                             ? net.links[l].max_power_w
                             : reduced_power_detail(net, q, bs, budget, l, j).power_w;
        }
    }
    return t;
}

PowerTable uniform_max_power_table(const Network& net, int num_slots) {
    PowerTable t;
    t.num_slots = num_slots;
    t.power.resize(net.links.size() * static_cast<std::size_t>(num_slots));
    for (const Link& l : net.links)
        for (int j = 0; j < num_slots; ++j) t.at(l.id, j) = l.max_power_w;
    return t;
}

namespace detail {

double slot_sinr_indexed(const Network& net, const RedIndex& idx,
                         const PowerTable& table, LinkId l, int slot) {
    const Link& link = net.links.at(l);
    const double signal = friis_received_power(table.at(l, slot), link.rx_directivity,
                                               link.tx_directivity, link_distance(net, link),
                                               link.frequency_hz);
    double interference = 0.0;
    const Antenna& rx = rx_antenna(net, link);
    for (RedEdgeId ri : idx.by_victim[l]) {
        const InterferenceEdge& r = net.red_edges[ri];
        const double p = table.at(r.base, slot);
        if (p > 0.0)
            interference += interference_power_at(rx, tx_antenna(net, net.links[r.base]).position, p);
    }
    return signal / (link.noise_w + interference);
}

} // namespace detail

double slot_sinr(const Network& net, const PowerTable& table, LinkId l, int slot) {
    return detail::slot_sinr_indexed(net, build_red_index(net), table, l, slot);
}

std::vector<double> per_link_capacity(const Network& net, const PowerTable& table) {
    const RedIndex idx = build_red_index(net);
    const std::int64_t n = static_cast<std::int64_t>(net.links.size());
    std::vector<double> cap(net.links.size(), 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const LinkId l = static_cast<LinkId>(i);
        double sum = 0.0;
        for (int j = 0; j < table.num_slots; ++j) {
            const double sinr = detail::slot_sinr_indexed(net, idx, table, l, j);
            sum += net.links[l].bandwidth_hz * std::log2(1.0 + sinr);
        }
        cap[l] = sum / static_cast<double>(table.num_slots);
    }
    return cap;
}

double network_capacity(const Network& net, const QueueSchedule& q, const PowerTable& table) {
    if (q.num_slots != table.num_slots)
        throw std::invalid_argument("network_capacity: schedule and table disagree on slot count");
    // Per-link partials are computed in parallel and reduced serially in id
    // order so the result is independent of thread count.
    double total = 0.0;
    for (double c : per_link_capacity(net, table)) total += c;
    return total;
}

double snr_only_capacity(const Network& net, const PowerTable& table) {
    double total = 0.0;
    for (const Link& l : net.links) {
        double sum = 0.0;
        for (int j = 0; j < table.num_slots; ++j)
            sum += pc_capacity(l, table.at(l.id, j), link_distance(net, l));
        total += sum / static_cast<double>(table.num_slots);
    }
    return total;
}

double mean_cycle_power(const Network& net, const PowerTable& table) {
    double sum = 0.0;
    for (const Link& l : net.links)
        for (int j = 0; j < table.num_slots; ++j) sum += table.at(l.id, j);
    return sum / static_cast<double>(table.num_slots);
}

} // namespace cci
