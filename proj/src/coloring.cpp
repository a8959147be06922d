#include "cci/coloring.hpp"

#include <algorithm>
#include <set>

namespace cci {

std::size_t DependencyGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adj) best = std::max(best, nbrs.size());
    return best;
}

DependencyGraph build_dependency_graph(const Network& net) {
    DependencyGraph g;
    g.adj.resize(net.links.size());
    std::set<std::pair<LinkId, LinkId>> seen;
    for (const InterferenceEdge& r : net.red_edges) {
        LinkId a = std::min(r.base, r.victim);
        LinkId b = std::max(r.base, r.victim);
        if (!seen.insert({a, b}).second) continue; // parallel red edges collapse
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
        ++g.edge_count;
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> greedy_vertex_color(const DependencyGraph& g) {
    const std::size_t n = g.adj.size();
    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (std::size_t v = 0; v < n; ++v) {
        used.assign(g.adj[v].size() + 1, 0);
        for (LinkId u : g.adj[v]) {
            if (u < v && static_cast<std::size_t>(color[u]) < used.size())
                used[color[u]] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

QueueSchedule dependent_edge_coloring(const Network& net) {
    QueueSchedule q;
    q.label = greedy_vertex_color(build_dependency_graph(net));
    int max_label = -1;
    for (int c : q.label) max_label = std::max(max_label, c);
    q.num_slots = max_label + 1;
    if (q.num_slots < 1) q.num_slots = 1; // empty or conflict-free network
    return q;
}

bool verify_legal_queue(const Network& net, const QueueSchedule& q) {
    if (q.label.size() != net.links.size()) return false;
    for (int c : q.label)
        if (c < 0 || c >= q.num_slots) return false;
    // (a) a base never shares its victim's slot
    for (const InterferenceEdge& r : net.red_edges)
        if (q.label[r.base] == q.label[r.victim]) return false;
    // (b) every red edge caused by a link carries that link's label; with
    // red labels defined as the base's label this is a consistency sweep
    // over each base's effect group.
    std::vector<int> red_label(net.red_edges.size());
    for (std::size_t i = 0; i < net.red_edges.size(); ++i)
        red_label[i] = q.label[net.red_edges[i].base];
    for (std::size_t i = 0; i < net.red_edges.size(); ++i)
        if (red_label[i] != q.label[net.red_edges[i].base]) return false;
    return true;
}

} // namespace cci
