#pragma once

#include "pg/graph.hpp"
#include "pg/numtheory.hpp"

#include <map>
#include <vector>

namespace pg {

// Mutual-reachability classes of a transitive digraph (single arcs both ways).
Partition diamond_partition_from_digraph(const Digraph& d);

// The partial order on diamond classes: [y] <= [x] iff the classes coincide
// or some arc runs x -> y.
struct ClassPoset {
    Partition classes;
    std::vector<Bitset> leq;      // leq[i].test(j): class i <= class j
    int identity_class = -1;      // unique global minimum of size 1, if any

    bool le(int i, int j) const { return leq[i].test(j); }
    // class indices excluding the identity class
    std::vector<int> proper_classes() const;
    // minimal among the proper classes and <= c
    std::vector<int> minimal_below(int c) const;
};

ClassPoset class_poset(const Digraph& d);

// Per-vertex element order recovered from an abstract directed power graph.
std::vector<num> element_orders_from_digraph(const Digraph& d);

// Multiset (sorted) of cyclic prime-power factor orders of the abelian group
// whose power graph g is.
std::vector<num> abelian_invariants_from_power_graph(const Graph& g);

// counts[p^i] = number of elements of order exactly p^i. Returns the unique
// multiset of cyclic p-power factors realizing the census.
std::vector<num> sylow_decomposition_from_order_counts(const std::map<num, num>& counts, num p);

} // namespace pg
