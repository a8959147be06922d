#include "cci/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "cci/radio.hpp"

namespace cci::serial {

PowerTable build_power_table(const Network& net, const QueueSchedule& q,
                             const InterferenceBudget& budget) {
    PowerTable t;
    t.num_slots = q.num_slots;
    t.power.assign(net.links.size() * static_cast<std::size_t>(q.num_slots), 0.0);

    const BlockerSet bs = blocker_sets(net, q);
    for (LinkId l = 0; l < net.links.size(); ++l)
        for (int j = 0; j < q.num_slots; ++j)
            t.at(l, j) = q.label[l] == j
                             ? net.links[l].max_power_w
                             : reduced_power(net, q, bs, budget, l, j);
    return t;
}

double network_capacity(const Network& net, const QueueSchedule& q, const PowerTable& table) {
    if (q.num_slots != table.num_slots)
        throw std::invalid_argument("network_capacity: schedule and table disagree on slot count");
    const RedIndex idx = build_red_index(net);
    double total = 0.0;
    for (const Link& l : net.links) {
        double sum = 0.0;
        const Antenna& rx = rx_antenna(net, l);
        for (int j = 0; j < table.num_slots; ++j) {
            const double signal = friis_received_power(table.at(l.id, j), l.rx_directivity,
                                                       l.tx_directivity, link_distance(net, l),
                                                       l.frequency_hz);
            double interference = 0.0;
            for (RedEdgeId ri : idx.by_victim[l.id]) {
                const InterferenceEdge& r = net.red_edges[ri];
                const double p = table.at(r.base, j);
                if (p > 0.0)
                    interference += interference_power_at(
                        rx, tx_antenna(net, net.links[r.base]).position, p);
            }
            sum += l.bandwidth_hz * std::log2(1.0 + signal / (l.noise_w + interference));
        }
        total += sum / static_cast<double>(table.num_slots);
    }
    return total;
}

std::vector<InterferenceEdge> derive_interference_edges(const Network& net,
                                                        double sir_threshold) {
    std::vector<InterferenceEdge> reds;
    for (const Link& victim : net.links) {
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
                r.id = static_cast<RedEdgeId>(reds.size());
                r.base = base.id;
                r.victim = victim.id;
                r.victim_node = victim.target;
                reds.push_back(r);
            }
        }
    }
    return reds;
}

} // namespace cci::serial
