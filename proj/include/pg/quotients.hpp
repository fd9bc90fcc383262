#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

struct QuotientResult {
    Graph graph;
    Partition partition;
};

// Closed-twin, open-twin and twin reductions.
QuotientResult ctr(const Graph& g);
QuotientResult otr(const Graph& g);
QuotientResult tr(const Graph& g);

// Every class lies inside one connected component.
bool is_tame(const Graph& g, const Partition& p);

// The projection onto the quotient is locally strong (loops included).
bool is_locally_strong(const Graph& g, const Partition& p);

// Every quotient edge has a witnessing cross edge. True by construction for
// quotient(); exposed for completeness checks of arbitrary projections.
bool is_complete_projection(const Graph& g, const Partition& p, const Graph& q);

struct ComponentCounts {
    int proper;      // components of P*(G)
    int diamond;     // components of P*(G)/diamond
    int closed_twin; // components of P*(G)/N
};

ComponentCounts component_counts(const GroupTable& G);

// The open-twin quotient of the proper power graph is tame exactly when the
// open-twin relation is trivial off the identity; returns whether the two
// sides agree.
bool o_tame_trivial_check(const GroupTable& G);

} // namespace pg
