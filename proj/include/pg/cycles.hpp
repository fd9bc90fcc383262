#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"
#include "pg/numtheory.hpp"

namespace pg {

// Vertex sets of the maximal directed cycles of a directed power graph:
// exactly the diamond classes of size >= 3.
std::vector<std::vector<int>> maximal_directed_cycles(const Digraph& d);

// An explicit hamiltonian cycle of P(C_n), n >= 3, as a sequence of n element
// ids (the closing edge back to the first entry is implied).
std::vector<int> hamiltonian_cycle_power_cyclic(num n);

// A directed hamiltonian path of the directed power graph of C_{p^k}:
// elements sorted by descending order, each dominating its successor.
std::vector<int> hamiltonian_directed_path_prime_power(num p, int k);

// Extend a cycle to one whose vertex set is a union of whole N-classes.
std::vector<int> close_cycle_over_n_classes(const Graph& g, const std::vector<int>& cycle);

num n_weight(const Partition& p, int class_index);
num n_weight(const Partition& p, const std::vector<int>& class_indices);

struct WeightedPathResult {
    std::vector<int> path;
    num weight = 0;
};

// Exact maximum-weight simple path by DFS with a remaining-weight bound.
// Ties break toward the lexicographically least canonical sequence.
WeightedPathResult max_weight_path(const Graph& gq, const std::vector<num>& weights,
                                   int budget_vertices = 24);

struct CycleBounds {
    num max_order;    // M_o: the largest element order
    num weight_bound; // w_G + 1
};

// Both lower bounds for the longest cycle of P(G); requires |G| >= 3.
CycleBounds cycle_bounds(const GroupTable& G);

// Exact longest cycle length (0 when acyclic) by exhaustive search; n <= max_n.
int longest_cycle_oracle(const Graph& g, int max_n = 20);

} // namespace pg
