#include "pg/power_graph.hpp"

#include "pg/errors.hpp"

#include <algorithm>

namespace pg {

Graph power_graph(const GroupTable& G, int dense_cap) {
    if (G.order() > dense_cap)
        fail(errc::too_large, "power_graph: group exceeds the dense adjacency cap");
    Graph g(G.order());
    for (int x = 0; x < G.order(); ++x)
        for (int y : G.cyclic_subgroup(x))
            if (y != x) g.add_edge(x, y);
    return g;
}

Digraph directed_power_graph(const GroupTable& G, int dense_cap) {
    if (G.order() > dense_cap)
        fail(errc::too_large, "directed_power_graph: group exceeds the dense adjacency cap");
    Digraph d(G.order());
    for (int x = 0; x < G.order(); ++x)
        for (int y : G.cyclic_subgroup(x))
            if (y != x) d.add_arc(x, y);
    return d;
}

ProperPowerGraph proper_power_graph(const GroupTable& G, int dense_cap) {
    if (G.order() < 2) fail(errc::trivial_group, "proper_power_graph: |G| must be >= 2");
    Graph full = power_graph(G, dense_cap);
    std::vector<int> vs;
    vs.reserve(G.order() - 1);
    for (int v = 0; v < G.order(); ++v)
        if (v != G.identity()) vs.push_back(v);
    auto sub = induced_subgraph(full, vs);
    return {std::move(sub.graph), std::move(sub.old_to_new), std::move(sub.new_to_old)};
}

bool edge_predicate(const GroupTable& G, int x, int y) {
    if (x < 0 || y < 0 || x >= G.order() || y >= G.order())
        fail(errc::out_of_range, "edge_predicate: element id out of range");
    if (x == y) return false;
    return G.generates(x, y) || G.generates(y, x);
}

std::vector<std::vector<int>> power_graph_adjacency(const GroupTable& G) {
    std::vector<std::vector<int>> adj(G.order());
    for (int x = 0; x < G.order(); ++x)
        for (int y : G.cyclic_subgroup(x))
            if (y != x) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

} // namespace pg
