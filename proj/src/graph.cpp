#include "pg/graph.hpp"

#include "pg/errors.hpp"

#include <algorithm>
#include <bit>

namespace pg {

int Bitset::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

std::vector<int> Bitset::members() const {
    std::vector<int> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t w = w_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

std::size_t bitset_hash(const Bitset& b) {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b.words()) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        fail(errc::out_of_range, "Graph::add_edge: vertex out of range");
    if (u == v) return; // loops are implicit, never stored
    adj_[u].set(v);
    adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& r : adj_) deg_sum += r.count();
    return deg_sum / 2;
}

Bitset Graph::closed_row(int v) const {
    Bitset b = adj_[v];
    b.set(v);
    return b;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        fail(errc::out_of_range, "Digraph::add_arc: vertex out of range");
    if (u == v) return;
    out_[u].set(v);
    in_[v].set(u);
}

std::size_t Digraph::arc_count() const {
    std::size_t c = 0;
    for (const auto& r : out_) c += r.count();
    return c;
}

Partition make_partition(int n, const std::vector<int>& labels) {
    Partition p;
    p.n = n;
    p.class_of.assign(n, -1);
    std::vector<int> relabel(n, -1); // old label (by first occurrence) -> class index
    for (int v = 0; v < n; ++v) {
        int l = labels[v];
        if (l < 0 || l >= n)
            fail(errc::partition_mismatch, "make_partition: label out of range");
        if (relabel[l] < 0) {
            relabel[l] = p.size();
            p.classes.emplace_back();
        }
        int c = relabel[l];
        p.class_of[v] = c;
        p.classes[c].push_back(v);
    }
    // first-occurrence order == order by smallest member; members pushed ascending
    return p;
}

Partition discrete_partition(int n) {
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return make_partition(n, labels);
}

bool covers(const Partition& p, int n) {
    if (p.n != n || static_cast<int>(p.class_of.size()) != n) return false;
    std::size_t total = 0;
    for (int ci = 0; ci < p.size(); ++ci) {
        const auto& c = p.classes[ci];
        if (c.empty()) return false;
        total += c.size();
        for (int v : c)
            if (v < 0 || v >= n || p.class_of[v] != ci) return false;
    }
    return total == static_cast<std::size_t>(n);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty())
        fail(errc::bad_vertex_list, "induced_subgraph: vertex list must be nonempty");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order())
            fail(errc::bad_vertex_list, "induced_subgraph: vertex out of range");
        if (i && vs[i] <= vs[i - 1])
            fail(errc::bad_vertex_list, "induced_subgraph: vertices must be sorted and distinct");
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(vs.size()), g.loops_implicit());
    out.old_to_new.assign(g.order(), -1);
    out.new_to_old = vs;
    for (std::size_t i = 0; i < vs.size(); ++i) out.old_to_new[vs[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph quotient(const Graph& g, const Partition& p) {
    if (!covers(p, g.order()))
        fail(errc::partition_mismatch, "quotient: partition does not cover the vertex set");
    Graph q(p.size(), g.loops_implicit());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int cu = p.class_of[u], cv = p.class_of[v];
            if (cu != cv) q.add_edge(cu, cv);
        }
    return q;
}

Components connected_components(const Graph& g) {
    Components out;
    out.label.assign(g.order(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (out.label[s] >= 0) continue;
        int c = out.count++;
        out.label[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (out.label[w] < 0) {
                    out.label[w] = c;
                    stack.push_back(w);
                }
        }
    }
    return out;
}

Graph underlying_undirected(const Digraph& d) {
    Graph g(d.order());
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out_neighbors(u))
            g.add_edge(u, v);
    return g;
}

bool is_transitive(const Digraph& d) {
    for (int y = 0; y < d.order(); ++y) {
        auto in = d.in_row(y).members();
        auto out = d.out_row(y).members();
        for (int x : in)
            for (int z : out)
                if (x != z && !d.arc(x, z)) return false;
    }
    return true;
}

} // namespace pg
