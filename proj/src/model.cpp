#include "cci/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cci {

namespace {

bool node_exists(const Network& net, NodeId id) {
    return id < net.nodes.size();
}

bool link_exists(const Network& net, LinkId id) {
    return id < net.links.size();
}

} // namespace

std::vector<Violation> validate(const Network& net) {
    std::vector<Violation> out;
    auto flag = [&out](const char* entity, std::uint32_t id, std::string rule) {
        out.push_back(Violation{entity, id, std::move(rule)});
    };

    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        const Node& n = net.nodes[i];
        if (n.id != i) flag("node", n.id, "ids must be dense and in order");
        for (const Antenna& a : n.antennas) {
            if (!finite(a.position)) flag("node", n.id, "antenna position must be finite");
            if (!(a.beamwidth_w > 0.0)) flag("node", n.id, "antenna beamwidth_w must be positive");
            if (!(a.boresight_rad >= 0.0 && a.boresight_rad < two_pi))
                flag("node", n.id, "antenna boresight must lie in [0, 2pi)");
        }
    }

    for (std::size_t i = 0; i < net.links.size(); ++i) {
        const Link& l = net.links[i];
        if (l.id != i) flag("link", l.id, "ids must be dense and in order");
        if (l.source == l.target) flag("link", l.id, "source and target must differ");
        if (!node_exists(net, l.source)) flag("link", l.id, "source node does not exist");
        if (!node_exists(net, l.target)) flag("link", l.id, "target node does not exist");
        if (node_exists(net, l.source) && l.source_antenna >= net.nodes[l.source].antennas.size())
            flag("link", l.id, "source antenna index out of range");
        if (node_exists(net, l.target) && l.target_antenna >= net.nodes[l.target].antennas.size())
            flag("link", l.id, "target antenna index out of range");
        if (!(l.frequency_hz > 0.0)) flag("link", l.id, "frequency must be positive");
        if (!(l.bandwidth_hz > 0.0)) flag("link", l.id, "bandwidth must be positive");
        if (!(l.max_power_w > 0.0)) flag("link", l.id, "max power must be positive");
        if (!(l.noise_w > 0.0)) flag("link", l.id, "noise must be positive");
        if (!(l.tx_directivity > 0.0)) flag("link", l.id, "tx directivity must be positive");
        if (!(l.rx_directivity > 0.0)) flag("link", l.id, "rx directivity must be positive");
        if (node_exists(net, l.source) && node_exists(net, l.target) &&
            l.source_antenna < net.nodes[l.source].antennas.size() &&
            l.target_antenna < net.nodes[l.target].antennas.size() &&
            net.nodes[l.source].antennas[l.source_antenna].position ==
                net.nodes[l.target].antennas[l.target_antenna].position)
            flag("link", l.id, "endpoints must not be co-located");
    }

    for (std::size_t i = 0; i < net.red_edges.size(); ++i) {
        const InterferenceEdge& r = net.red_edges[i];
        if (r.id != i) flag("red_edge", r.id, "ids must be dense and in order");
        if (r.base == r.victim) flag("red_edge", r.id, "base and victim must differ");
        if (!link_exists(net, r.base)) flag("red_edge", r.id, "base link does not exist");
        if (!link_exists(net, r.victim)) flag("red_edge", r.id, "victim link does not exist");
        if (link_exists(net, r.victim) && r.victim_node != net.links[r.victim].target)
            flag("red_edge", r.id, "victim_node must be the victim's receiving endpoint");
        if (link_exists(net, r.base) && link_exists(net, r.victim) &&
            net.links[r.base].frequency_hz != net.links[r.victim].frequency_hz)
            flag("red_edge", r.id, "base and victim must share a frequency");
        // The interference kernel is singular when the interfering transmitter
        // sits on top of the victim's receiver.
        if (link_exists(net, r.base) && link_exists(net, r.victim)) {
            const Link& b = net.links[r.base];
            const Link& v = net.links[r.victim];
            if (node_exists(net, b.source) && node_exists(net, v.target) &&
                b.source_antenna < net.nodes[b.source].antennas.size() &&
                v.target_antenna < net.nodes[v.target].antennas.size() &&
                net.nodes[b.source].antennas[b.source_antenna].position ==
                    net.nodes[v.target].antennas[v.target_antenna].position)
                flag("red_edge", r.id, "base transmitter co-located with victim receiver");
        }
    }

    std::set<std::pair<LinkId, LinkId>> seen;
    for (const InterferenceEdge& r : net.red_edges) {
        if (!seen.insert({r.base, r.victim}).second)
            flag("red_edge", r.id, "duplicate (base, victim) pair");
    }

    return out;
}

bool is_single_frequency(const Network& net) {
    return frequencies(net).size() <= 1;
}

std::vector<double> frequencies(const Network& net) {
    std::vector<double> fs;
    for (const Link& l : net.links) fs.push_back(l.frequency_hz);
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

const Antenna& tx_antenna(const Network& net, const Link& link) {
    return net.nodes.at(link.source).antennas.at(link.source_antenna);
}

const Antenna& rx_antenna(const Network& net, const Link& link) {
    return net.nodes.at(link.target).antennas.at(link.target_antenna);
}

double link_distance(const Network& net, const Link& link) {
    return distance(tx_antenna(net, link).position, rx_antenna(net, link).position);
}

RedIndex build_red_index(const Network& net) {
    RedIndex idx;
    idx.by_base.resize(net.links.size());
    idx.by_victim.resize(net.links.size());
    for (const InterferenceEdge& r : net.red_edges) {
        idx.by_base[r.base].push_back(r.id);
        idx.by_victim[r.victim].push_back(r.id);
    }
    return idx;
}

std::uint32_t max_interference_degree(const Network& net) {
    std::vector<std::uint32_t> deg(net.links.size(), 0);
    for (const InterferenceEdge& r : net.red_edges) {
        ++deg[r.base];
        ++deg[r.victim];
    }
    std::uint32_t best = 0;
    for (std::uint32_t d : deg) best = std::max(best, d);
    return best;
}

FrequencySubgraph make_subgraph(const Network& net, const std::vector<std::size_t>& link_indices) {
    FrequencySubgraph sub;

    std::map<NodeId, NodeId> node_map;
    for (std::size_t li : link_indices) {
        const Link& l = net.links.at(li);
        for (NodeId n : {l.source, l.target}) {
            if (node_map.emplace(n, 0).second) {} // placeholder, renumbered below
        }
    }
    NodeId next_node = 0;
    for (auto& [orig, dense] : node_map) {
        dense = next_node++;
        Node copy = net.nodes.at(orig);
        copy.id = dense;
        sub.network.nodes.push_back(std::move(copy));
        sub.node_origin.push_back(orig);
    }

    std::vector<LinkId> link_map(net.links.size(), static_cast<LinkId>(-1));
    LinkId next_link = 0;
    for (std::size_t li : link_indices) {
        Link copy = net.links.at(li);
        link_map[li] = next_link;
        copy.id = next_link++;
        copy.source = node_map.at(copy.source);
        copy.target = node_map.at(copy.target);
        sub.network.links.push_back(std::move(copy));
        sub.link_origin.push_back(li);
    }

    RedEdgeId next_red = 0;
    for (std::size_t ri = 0; ri < net.red_edges.size(); ++ri) {
        const InterferenceEdge& r = net.red_edges[ri];
        if (link_map[r.base] == static_cast<LinkId>(-1) ||
            link_map[r.victim] == static_cast<LinkId>(-1))
            continue;
        InterferenceEdge copy = r;
        copy.id = next_red++;
        copy.base = link_map[r.base];
        copy.victim = link_map[r.victim];
        copy.victim_node = sub.network.links[copy.victim].target;
        sub.network.red_edges.push_back(copy);
        sub.red_origin.push_back(ri);
    }

    return sub;
}

FrequencySubgraph subgraph_by_frequency(const Network& net, double f_hz) {
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < net.links.size(); ++i)
        if (net.links[i].frequency_hz == f_hz) picks.push_back(i);
    return make_subgraph(net, picks);
}

std::vector<FrequencySubgraph> split_by_frequency(const Network& net) {
    std::vector<FrequencySubgraph> out;
    for (double f : frequencies(net)) out.push_back(subgraph_by_frequency(net, f));
    return out;
}

} // namespace cci
