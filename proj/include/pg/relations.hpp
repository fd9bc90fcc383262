#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

// N[x] as a sorted list (always contains x).
std::vector<int> closed_neighborhood(const Graph& g, int x);

// Vertices adjacent to everything else.
std::vector<int> star_vertices(const Graph& g);

enum class StarCaseKind {
    complete_cyclic_prime_power, // |S| = n
    cyclic_non_prime_power,      // |S| = 1 + phi(n)
    generalized_quaternion,      // |S| = 2
    singleton_star,              // |S| = 1
};

struct StarCase {
    StarCaseKind kind;
    std::vector<int> star_set;
};

const char* star_case_name(StarCaseKind k);

// Decide which star-census case a power graph falls in, using only |S|, n and
// phi(n). Tests run in the order: completeness, 1 + phi(n), |S| = 2, |S| = 1.
// Throws not_a_power_graph_shape when |S| matches no case.
StarCase classify_star_case(const Graph& g);

// Classes of equal closed neighborhoods.
Partition n_partition(const Graph& g);

// Classes of equal generated subgroup; |[x]| = phi(o(x)).
Partition diamond_partition_from_group(const GroupTable& G);

// Classes of equal element order.
Partition o_partition(const GroupTable& G);

// Classes of equal open neighborhoods.
Partition open_twin_partition(const Graph& g);

// Join of the closed- and open-twin relations.
Partition twin_partition(const Graph& g);

// N[X] = ∩_{x∈X} N[x]; X must be nonempty.
Bitset neighborhood_of_set(const Graph& g, const std::vector<int>& xs);

// X̂ = N[N[X]].
Bitset hat(const Graph& g, const std::vector<int>& xs);

} // namespace pg
