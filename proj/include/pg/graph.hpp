#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pg {

// Fixed-capacity bitset sized at construction. Rows of adjacency matrices,
// neighborhood sets and the like all live in these.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const;

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);

    bool operator==(const Bitset&) const = default;

    std::vector<int> members() const;
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

std::size_t bitset_hash(const Bitset& b);

// Undirected graph on vertices [0, n). Adjacency is symmetric and self-edges
// are never stored; every vertex carries an implicit loop instead, which is
// what quotients and projections rely on.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool loops_implicit = true)
        : n_(n), loops_implicit_(loops_implicit), adj_(n, Bitset(n)) {}

    int order() const { return n_; }
    bool loops_implicit() const { return loops_implicit_; }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    void add_edge(int u, int v);

    std::size_t edge_count() const;
    int degree(int v) const { return adj_[v].count(); }

    const Bitset& row(int v) const { return adj_[v]; }
    Bitset closed_row(int v) const;
    std::vector<int> neighbors(int v) const { return adj_[v].members(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    bool loops_implicit_ = true;
    std::vector<Bitset> adj_;
};

// Directed graph; arcs (x, y) with x != y, no self-arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

    int order() const { return n_; }

    bool arc(int u, int v) const { return u != v && out_[u].test(v); }
    void add_arc(int u, int v);

    std::size_t arc_count() const;
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }

    const Bitset& out_row(int v) const { return out_[v]; }
    const Bitset& in_row(int v) const { return in_[v]; }
    std::vector<int> out_neighbors(int v) const { return out_[v].members(); }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
};

// Equivalence-class decomposition of [0, n). Classes are sorted internally and
// ordered by smallest member, so everything downstream is deterministic.
struct Partition {
    int n = 0;
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;

    int size() const { return static_cast<int>(classes.size()); }
};

// Canonicalize an arbitrary labelling into a Partition.
Partition make_partition(int n, const std::vector<int>& labels);
Partition discrete_partition(int n);
bool covers(const Partition& p, int n);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for vertices not kept
    std::vector<int> new_to_old;
};

// vs must be sorted, duplicate-free and nonempty.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// One vertex per class; distinct classes joined iff some cross edge exists.
Graph quotient(const Graph& g, const Partition& p);

struct Components {
    int count = 0;
    std::vector<int> label; // labels assigned in order of smallest vertex
};

Components connected_components(const Graph& g);

Graph underlying_undirected(const Digraph& d);

bool is_transitive(const Digraph& d);

} // namespace pg
