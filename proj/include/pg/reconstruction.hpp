#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"
#include "pg/isomorphism.hpp"
#include "pg/numtheory.hpp"
#include "pg/relations.hpp"

#include <optional>

namespace pg {

struct SecondTypeParams {
    num p = 0;
    int r = 0;
    int s = 0;

    bool operator==(const SecondTypeParams&) const = default;
};

struct NClassType {
    enum class Tag { star, first_type, second_type };

    Tag tag = Tag::first_type;
    SecondTypeParams params; // meaningful for second_type; (p, r) also set for
                             // critical first-type classes
    bool critical = false;   // X̂ = X ∪ {1} with |X̂| = p^r, r >= 2

    bool operator==(const NClassType&) const = default;
};

const char* n_class_tag_name(NClassType::Tag t);

// The unique (p, r, s) with chat = p^r, r >= 2, 0 <= s <= r-2, c = p^r - p^s,
// when it exists.
std::optional<SecondTypeParams> detect_size_signature(num c_size, num chat_size);

// Decide the type of one N-class of a graph whose star set is the singleton
// `star`. `cls` must be an N-class of g.
NClassType classify_n_class(const Graph& g, const std::vector<int>& star,
                            const std::vector<int>& cls);

// Cut a second-type class into runs of sizes phi(p^{s+1}),...,phi(p^r), lowest
// vertex ids first. Valid up to graph isomorphism because members of an
// N-class are interchangeable.
std::vector<std::vector<int>> split_second_type(const std::vector<int>& cls,
                                                const SecondTypeParams& t);

struct DiamondExtraction {
    Partition partition;
    int identity = -1;
    // per class: p^i for subclasses produced by splitting a second-type
    // class, 0 when the order is not pinned by the splitting step
    std::vector<num> intended_order;
};

// Extract the full diamond partition of an abstract power graph with a
// singleton star set.
DiamondExtraction diamond_from_power_graph(const Graph& g);

// Orient every edge of a power graph, reconstructing the directed power
// graph: underlying_undirected(orient(g)) == g, and for g = P(G) the result
// is digraph-isomorphic to the directed power graph of G.
Digraph orient(const Graph& g, const IsoOptions& opts = {});

struct NClassReport {
    std::vector<int> members;
    num chat_size = 0;
    NClassType type;
};

// Classify every N-class of a singleton-star power graph (report order
// follows the canonical N-partition).
std::vector<NClassReport> classify_all_n_classes(const Graph& g);

struct SparseCriticalClass {
    std::vector<int> members;
    num chat_size = 0;
    NClassType type;
};

// Critical classes of P(G) through sorted neighbor lists only; usable for
// groups past the dense adjacency cap. Requires a singleton star set.
std::vector<SparseCriticalClass> scan_critical_classes(const GroupTable& G);

} // namespace pg
