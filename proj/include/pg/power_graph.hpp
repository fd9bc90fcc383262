#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

inline constexpr int kDenseGraphCap = 4096;

// P(G): {x,y} joined iff x != y and one is a power of the other.
Graph power_graph(const GroupTable& G, int dense_cap = kDenseGraphCap);

// P⃗(G): arc (x,y) iff x != y and y ∈ ⟨x⟩.
Digraph directed_power_graph(const GroupTable& G, int dense_cap = kDenseGraphCap);

struct ProperPowerGraph {
    Graph graph;
    std::vector<int> old_to_new; // identity maps to -1
    std::vector<int> new_to_old;
};

// P*(G): the subgraph induced by the non-identity elements.
ProperPowerGraph proper_power_graph(const GroupTable& G, int dense_cap = kDenseGraphCap);

// O(log) edge test through the cached cyclic subgroups; works at any order.
bool edge_predicate(const GroupTable& G, int x, int y);

// Sorted neighbor lists of P(G) without materializing an adjacency matrix.
// Memory is proportional to the number of edges, so this is the entry point
// for groups past the dense cap.
std::vector<std::vector<int>> power_graph_adjacency(const GroupTable& G);

} // namespace pg
