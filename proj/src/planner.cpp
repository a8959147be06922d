#include "cci/planner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "cci/radio.hpp"

namespace cci {

namespace {

// Parent-level planning engine: geometry-derived couplings are computed once;
// partitions are membership masks; every per-link quantity is evaluated from
// O(delta)-sized neighborhoods plus greedy recolorings.
struct Engine {
    const Network& net;
    RedIndex idx;
    std::vector<double> coupling; // per red edge: z(theta) / (4 pi d^2)
    std::vector<double> p_min;    // per link: Friis at P_max / ratio_x
    double ratio_x;

    Engine(const Network& n, double x) : net(n), idx(build_red_index(n)), ratio_x(x) {
        coupling.resize(net.red_edges.size());
        for (const InterferenceEdge& r : net.red_edges) {
            const Link& base = net.links[r.base];
            const Link& victim = net.links[r.victim];
            const Antenna& rx = rx_antenna(net, victim);
            const Vec2 tx_pos = tx_antenna(net, base).position;
            const double d = distance(rx.position, tx_pos);
            const double theta = angle_of_reception(rx, tx_pos);
            coupling[r.id] = rpf_gain(theta, rx.beamwidth_w) /
                             (4.0 * std::numbers::pi * d * d);
        }
        p_min.resize(net.links.size());
        for (const Link& l : net.links) {
            const double received = friis_received_power(l.max_power_w, l.rx_directivity,
                                                         l.tx_directivity, link_distance(net, l),
                                                         l.frequency_hz);
            p_min[l.id] = received / x;
        }
    }

    struct Part {
        std::vector<char> member;       // parent-indexed
        std::vector<int> label;         // parent-indexed, -1 outside
        std::vector<std::uint32_t> indeg; // member red edges onto each link
        int num_slots = 1;
    };

    Part empty_part() const {
        Part p;
        p.member.assign(net.links.size(), 0);
        p.label.assign(net.links.size(), -1);
        p.indeg.assign(net.links.size(), 0);
        return p;
    }

    Part full_part() const {
        Part p = empty_part();
        std::fill(p.member.begin(), p.member.end(), 1);
        for (const InterferenceEdge& r : net.red_edges) ++p.indeg[r.victim];
        recolor(p);
        return p;
    }

    // Greedy smallest-available color over member links in ascending id
    // order; identical to dependent_edge_coloring on the induced subgraph.
    void recolor(Part& p) const {
        std::fill(p.label.begin(), p.label.end(), -1);
        int max_label = 0;
        std::vector<char> used;
        for (LinkId l = 0; l < net.links.size(); ++l) {
            if (!p.member[l]) continue;
            std::size_t cap = 1;
            for (RedEdgeId ri : idx.by_base[l])
                cap += p.member[net.red_edges[ri].victim] ? 1 : 0;
            for (RedEdgeId ri : idx.by_victim[l])
                cap += p.member[net.red_edges[ri].base] ? 1 : 0;
            used.assign(cap, 0);
            auto mark = [&](LinkId other) {
                if (other < l && p.member[other] && p.label[other] >= 0 &&
                    static_cast<std::size_t>(p.label[other]) < used.size())
                    used[p.label[other]] = 1;
            };
            for (RedEdgeId ri : idx.by_base[l]) mark(net.red_edges[ri].victim);
            for (RedEdgeId ri : idx.by_victim[l]) mark(net.red_edges[ri].base);
            int c = 0;
            while (used[c]) ++c;
            p.label[l] = c;
            max_label = std::max(max_label, c);
        }
        p.num_slots = max_label + 1;
    }

    // Mean transmit power of member link l over the part's queue cycle.
    double avg_black(const Part& p, LinkId l) const {
        const double pmax = net.links[l].max_power_w;
        const double slots = static_cast<double>(p.num_slots);
        // Strictest cap per distinct victim slot; every other slot is P_max.
        std::map<int, double> caps;
        for (RedEdgeId ri : idx.by_base[l]) {
            const InterferenceEdge& r = net.red_edges[ri];
            if (!p.member[r.victim]) continue;
            const double cap = p_min[r.victim] /
                               (coupling[ri] * static_cast<double>(p.indeg[r.victim]));
            auto [it, fresh] = caps.emplace(p.label[r.victim], cap);
            if (!fresh) it->second = std::min(it->second, cap);
        }
        double sum = pmax * (slots - static_cast<double>(caps.size()));
        for (const auto& [slot, cap] : caps) sum += std::min(pmax, cap);
        return sum / slots;
    }

    // Signed mean power of a member red edge (minus the interference its
    // base couples into the victim).
    double avg_red(const Part& p, RedEdgeId ri) const {
        return -coupling[ri] * avg_black(p, net.red_edges[ri].base);
    }

    // Membership toggles keeping indeg consistent.
    void add(Part& p, LinkId l) const {
        p.member[l] = 1;
        for (RedEdgeId ri : idx.by_base[l])
            if (p.member[net.red_edges[ri].victim]) ++p.indeg[net.red_edges[ri].victim];
        for (RedEdgeId ri : idx.by_victim[l])
            if (p.member[net.red_edges[ri].base]) ++p.indeg[l];
    }

    void remove(Part& p, LinkId l) const {
        p.member[l] = 0;
        p.indeg[l] = 0;
        for (RedEdgeId ri : idx.by_base[l])
            if (p.member[net.red_edges[ri].victim]) --p.indeg[net.red_edges[ri].victim];
    }

    PgEntry power_gain(const Part& g1, const Part& g2, LinkId e) const {
        PgEntry entry;
        entry.link = e;

        // --- G1 side: e leaves. U_G1 from the current queue Q.
        std::vector<RedEdgeId> contesting, effects;
        std::vector<LinkId> bases;
        for (RedEdgeId ri : idx.by_victim[e])
            if (g1.member[net.red_edges[ri].base]) {
                contesting.push_back(ri);
                bases.push_back(net.red_edges[ri].base);
            }
        for (RedEdgeId ri : idx.by_base[e])
            if (g1.member[net.red_edges[ri].victim]) effects.push_back(ri);
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

        Part q1 = g1;
        remove(q1, e);
        recolor(q1);

        double pg1 = -avg_black(g1, e);
        // Red members vanish with e: their Q1 power is zero.
        for (RedEdgeId ri : contesting) pg1 += 0.0 - avg_red(g1, ri);
        for (RedEdgeId ri : effects) pg1 += 0.0 - avg_red(g1, ri);
        for (LinkId b : bases) pg1 += avg_black(q1, b) - avg_black(g1, b);
        entry.pg_g1 = pg1;

        // --- G2 side: e joins. U_G2 materializes against g2's members.
        std::vector<RedEdgeId> contesting2, effects2;
        std::vector<LinkId> bases2;
        for (RedEdgeId ri : idx.by_victim[e])
            if (g2.member[net.red_edges[ri].base]) {
                contesting2.push_back(ri);
                bases2.push_back(net.red_edges[ri].base);
            }
        for (RedEdgeId ri : idx.by_base[e])
            if (g2.member[net.red_edges[ri].victim]) effects2.push_back(ri);
        std::sort(bases2.begin(), bases2.end());
        bases2.erase(std::unique(bases2.begin(), bases2.end()), bases2.end());

        Part q2 = g2;
        add(q2, e);
        recolor(q2);

        double pg2 = avg_black(q2, e);
        // Red members did not exist before e joined: their Q' power is zero.
        for (RedEdgeId ri : contesting2) pg2 += avg_red(q2, ri) - 0.0;
        for (RedEdgeId ri : effects2) pg2 += avg_red(q2, ri) - 0.0;
        for (LinkId b : bases2) pg2 += avg_black(q2, b) - avg_black(g2, b);
        entry.pg_g2 = pg2;

        entry.pg = entry.pg_g1 + entry.pg_g2;
        return entry;
    }
};

Engine::Part part_from_members(const Engine& eng, const std::vector<LinkId>& members) {
    Engine::Part p = eng.empty_part();
    for (LinkId l : members) p.member[l] = 1;
    for (const InterferenceEdge& r : eng.net.red_edges)
        if (p.member[r.base] && p.member[r.victim]) ++p.indeg[r.victim];
    eng.recolor(p);
    return p;
}

std::vector<LinkId> members_of(const Engine::Part& p) {
    std::vector<LinkId> out;
    for (LinkId l = 0; l < p.member.size(); ++l)
        if (p.member[l]) out.push_back(l);
    return out;
}

// Greedy migration loop shared by assign_new_frequency and plan_frequencies.
// Moves positive-PG links from g1 to g2 until no g1 member has pg > 0,
// re-verifying with full sweeps so the termination property is exact.
std::vector<LinkId> migrate_positive_pg(const Engine& eng, Engine::Part& g1, Engine::Part& g2) {
    struct HeapEntry {
        double pg;
        LinkId link;
        std::uint64_t version;
    };
    auto less = [](const HeapEntry& a, const HeapEntry& b) {
        if (a.pg != b.pg) return a.pg < b.pg;
        return a.link > b.link; // equal pg: smaller id first
    };
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(less)> heap(less);
    std::vector<std::uint64_t> version(eng.net.links.size(), 0);

    auto push_fresh = [&](LinkId l) {
        const PgEntry pg = eng.power_gain(g1, g2, l);
        heap.push({pg.pg, l, ++version[l]});
    };

    for (LinkId l = 0; l < eng.net.links.size(); ++l)
        if (g1.member[l]) push_fresh(l);

    std::vector<LinkId> migrated;
    while (true) {
        while (!heap.empty()) {
            const HeapEntry top = heap.top();
            heap.pop();
            if (top.version != version[top.link] || !g1.member[top.link]) continue;

            // Stale-tolerant pop: recompute, and only migrate when the fresh
            // value still beats the rest of the heap.
            const PgEntry fresh = eng.power_gain(g1, g2, top.link);
            if (!(fresh.pg > 0.0)) {
                heap.push({fresh.pg, top.link, ++version[top.link]});
                if (fresh.pg == top.pg) break; // true maximum is non-positive
                continue;
            }
            if (!heap.empty() && fresh.pg < top.pg) {
                const HeapEntry& next = heap.top();
                if (less(HeapEntry{fresh.pg, top.link, 0}, next)) {
                    heap.push({fresh.pg, top.link, ++version[top.link]});
                    continue;
                }
            }

            eng.remove(g1, top.link);
            eng.recolor(g1);
            eng.add(g2, top.link);
            eng.recolor(g2);
            migrated.push_back(top.link);

            // Refresh the scored neighborhood of the migrated link.
            std::vector<LinkId> touched;
            for (RedEdgeId ri : eng.idx.by_victim[top.link]) touched.push_back(eng.net.red_edges[ri].base);
            for (RedEdgeId ri : eng.idx.by_base[top.link]) touched.push_back(eng.net.red_edges[ri].victim);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (LinkId l : touched)
                if (g1.member[l]) push_fresh(l);
        }

        // Exactness sweep: recoloring ripples can reach beyond the refreshed
        // neighborhood, so re-score everything before declaring termination.
        bool dirty = false;
        for (LinkId l = 0; l < eng.net.links.size(); ++l) {
            if (!g1.member[l]) continue;
            const PgEntry pg = eng.power_gain(g1, g2, l);
            if (pg.pg > 0.0) {
                heap.push({pg.pg, l, ++version[l]});
                dirty = true;
            }
        }
        if (!dirty) break;
    }
    return migrated;
}

double part_capacity(const Network& parent, const SubgraphState& state) {
    std::vector<std::size_t> picks(state.members.begin(), state.members.end());
    const FrequencySubgraph sub = make_subgraph(parent, picks);
    return network_capacity(sub.network, state.schedule, state.table);
}

} // namespace

Surrounding surrounding_set(const Network& subgraph, LinkId link) {
    const RedIndex idx = build_red_index(subgraph);
    Surrounding s;
    s.contesting_red = idx.by_victim.at(link);
    s.effects = idx.by_base.at(link);
    for (RedEdgeId ri : s.contesting_red) s.contesting_bases.push_back(subgraph.red_edges[ri].base);
    std::sort(s.contesting_bases.begin(), s.contesting_bases.end());
    s.contesting_bases.erase(std::unique(s.contesting_bases.begin(), s.contesting_bases.end()),
                             s.contesting_bases.end());
    return s;
}

double avg_queue_power(EdgeRef edge, const Network& net, const QueueSchedule& q,
                       const PowerTable& table) {
    const double slots = static_cast<double>(table.num_slots);
    if (edge.kind == EdgeRef::black) {
        double sum = 0.0;
        for (int j = 0; j < table.num_slots; ++j) sum += table.at(edge.id, j);
        return sum / slots;
    }
    const InterferenceEdge& r = net.red_edges.at(edge.id);
    const Link& victim = net.links[r.victim];
    const Antenna& rx = rx_antenna(net, victim);
    const Vec2 tx_pos = tx_antenna(net, net.links[r.base]).position;
    double sum = 0.0;
    for (int j = 0; j < table.num_slots; ++j) {
        const double p = table.at(r.base, j);
        if (p > 0.0) sum += interference_power_at(rx, tx_pos, p);
    }
    return -sum / slots;
}

SubgraphState make_state(const Network& parent, std::vector<LinkId> members, double ratio_x) {
    std::sort(members.begin(), members.end());
    SubgraphState st;
    st.members = std::move(members);
    std::vector<std::size_t> picks(st.members.begin(), st.members.end());
    const FrequencySubgraph sub = make_subgraph(parent, picks);
    st.schedule = dependent_edge_coloring(sub.network);
    st.budget = budget_from_ratio(sub.network, ratio_x);
    st.table = build_power_table(sub.network, st.schedule, st.budget);
    return st;
}

PgEntry power_gain(const Network& parent, const SubgraphState& g1,
                   const SubgraphState& g2, LinkId e, const PlannerConfig& cfg) {
    const Engine eng(parent, cfg.ratio_x);
    const Engine::Part p1 = part_from_members(eng, g1.members);
    const Engine::Part p2 = part_from_members(eng, g2.members);
    if (!p1.member[e]) throw std::invalid_argument("power_gain: link not in g1");
    return eng.power_gain(p1, p2, e);
}

SplitResult assign_new_frequency(const Network& net, const PlannerConfig& cfg) {
    if (!is_single_frequency(net))
        throw std::invalid_argument("assign_new_frequency: network must be single-frequency");

    const Engine eng(net, cfg.ratio_x);
    Engine::Part g1 = eng.full_part();
    Engine::Part g2 = eng.empty_part();

    SplitResult res;
    res.migrated = migrate_positive_pg(eng, g1, g2);
    res.g1 = make_state(net, members_of(g1), cfg.ratio_x);
    res.g2 = make_state(net, members_of(g2), cfg.ratio_x);
    return res;
}

FrequencyPlan plan_frequencies(const Network& net, const PlannerConfig& cfg,
                               double profit_threshold, int max_freqs) {
    if (!is_single_frequency(net))
        throw std::invalid_argument("plan_frequencies: network must be single-frequency");
    if (max_freqs < 1) throw std::invalid_argument("plan_frequencies: max_freqs must be >= 1");

    const Engine eng(net, cfg.ratio_x);
    std::vector<Engine::Part> parts{eng.full_part()};

    FrequencyPlan plan;
    auto snapshot = [&]() {
        plan.states.clear();
        for (const Engine::Part& p : parts)
            plan.states.push_back(make_state(net, members_of(p), cfg.ratio_x));
    };
    snapshot();
    double current = plan_capacity(net, plan);
    plan.profit_trace.push_back({static_cast<int>(parts.size()), current});

    while (static_cast<int>(parts.size()) < max_freqs) {
        // Split the partition with the largest positive-PG mass against an
        // empty target frequency.
        const Engine::Part empty = eng.empty_part();
        double best_mass = 0.0;
        std::size_t best_part = parts.size();
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            double mass = 0.0;
            for (LinkId l = 0; l < net.links.size(); ++l)
                if (parts[pi].member[l]) {
                    const double pg = eng.power_gain(parts[pi], empty, l).pg;
                    if (pg > 0.0) mass += pg;
                }
            if (mass > best_mass) {
                best_mass = mass;
                best_part = pi;
            }
        }
        if (best_part == parts.size()) break; // nowhere left to improve

        Engine::Part g1 = parts[best_part];
        Engine::Part g2 = eng.empty_part();
        const std::vector<LinkId> moved = migrate_positive_pg(eng, g1, g2);
        if (moved.empty()) break;

        std::vector<Engine::Part> trial = parts;
        trial[best_part] = g1;
        trial.push_back(g2);

        double trial_capacity = 0.0;
        std::vector<SubgraphState> trial_states;
        for (const Engine::Part& p : trial) {
            SubgraphState st = make_state(net, members_of(p), cfg.ratio_x);
            trial_capacity += part_capacity(net, st);
            trial_states.push_back(std::move(st));
        }

        if (!(trial_capacity - current > profit_threshold)) break; // roll back

        parts = std::move(trial);
        plan.states = std::move(trial_states);
        current = trial_capacity;
        plan.profit_trace.push_back({static_cast<int>(parts.size()), current});
    }

    plan.assignments.assign(net.links.size(), 0);
    for (std::size_t pi = 0; pi < plan.states.size(); ++pi)
        for (LinkId l : plan.states[pi].members) plan.assignments[l] = static_cast<int>(pi);
    return plan;
}

double plan_capacity(const Network& net, const FrequencyPlan& plan) {
    double total = 0.0;
    for (const SubgraphState& st : plan.states) total += part_capacity(net, st);
    return total;
}

} // namespace cci
