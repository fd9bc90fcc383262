#include "pg/relations.hpp"

#include "pg/errors.hpp"
#include "pg/numtheory.hpp"

#include <algorithm>
#include <unordered_map>

namespace pg {

namespace {

// Group vertices by a per-vertex Bitset key, labels by first occurrence.
Partition partition_by_rows(int n, const std::vector<Bitset>& rows) {
    std::unordered_map<std::size_t, std::vector<int>> buckets;
    std::vector<int> labels(n, -1);
    for (int v = 0; v < n; ++v) {
        auto& bucket = buckets[bitset_hash(rows[v])];
        int found = -1;
        for (int u : bucket)
            if (rows[u] == rows[v]) {
                found = u;
                break;
            }
        if (found < 0) {
            bucket.push_back(v);
            labels[v] = v;
        } else {
            labels[v] = labels[found];
        }
    }
    return make_partition(n, labels);
}

} // namespace

std::vector<int> closed_neighborhood(const Graph& g, int x) {
    if (x < 0 || x >= g.order())
        fail(errc::out_of_range, "closed_neighborhood: vertex out of range");
    return g.closed_row(x).members();
}

std::vector<int> star_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

const char* star_case_name(StarCaseKind k) {
    switch (k) {
    case StarCaseKind::complete_cyclic_prime_power: return "complete_cyclic_prime_power";
    case StarCaseKind::cyclic_non_prime_power: return "cyclic_non_prime_power";
    case StarCaseKind::generalized_quaternion: return "generalized_quaternion";
    case StarCaseKind::singleton_star: return "singleton_star";
    }
    return "?";
}

StarCase classify_star_case(const Graph& g) {
    auto s = star_vertices(g);
    num n = g.order();
    num size = static_cast<num>(s.size());
    if (size == n) return {StarCaseKind::complete_cyclic_prime_power, std::move(s)};
    if (size == 1 + euler_phi(n)) return {StarCaseKind::cyclic_non_prime_power, std::move(s)};
    if (size == 2) return {StarCaseKind::generalized_quaternion, std::move(s)};
    if (size == 1) return {StarCaseKind::singleton_star, std::move(s)};
    fail(errc::not_a_power_graph_shape,
         "star set of size " + std::to_string(size) + " matches no power-graph case");
}

Partition n_partition(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) rows.push_back(g.closed_row(v));
    return partition_by_rows(g.order(), rows);
}

Partition diamond_partition_from_group(const GroupTable& G) {
    // ⟨x⟩ = ⟨y⟩ iff each generates the other
    std::vector<int> labels(G.order(), -1);
    for (int v = 0; v < G.order(); ++v) {
        if (labels[v] >= 0) continue;
        labels[v] = v;
        for (int w : G.cyclic_subgroup(v))
            if (w != v && G.element_order(w) == G.element_order(v)) labels[w] = v;
    }
    return make_partition(G.order(), labels);
}

Partition o_partition(const GroupTable& G) {
    std::vector<int> first(G.order() + 1, -1);
    std::vector<int> labels(G.order());
    for (int v = 0; v < G.order(); ++v) {
        int o = G.element_order(v);
        if (first[o] < 0) first[o] = v;
        labels[v] = first[o];
    }
    return make_partition(G.order(), labels);
}

Partition open_twin_partition(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
    return partition_by_rows(g.order(), rows);
}

Partition twin_partition(const Graph& g) {
    Partition n = n_partition(g);
    Partition o = open_twin_partition(g);
    // union-find over vertices, merging along both partitions
    std::vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& c : n.classes)
        for (std::size_t i = 1; i < c.size(); ++i) unite(c[0], c[i]);
    for (const auto& c : o.classes)
        for (std::size_t i = 1; i < c.size(); ++i) unite(c[0], c[i]);
    std::vector<int> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[v] = find(v);
    return make_partition(g.order(), labels);
}

Bitset neighborhood_of_set(const Graph& g, const std::vector<int>& xs) {
    if (xs.empty()) fail(errc::empty_set, "neighborhood_of_set: set must be nonempty");
    for (int x : xs)
        if (x < 0 || x >= g.order())
            fail(errc::out_of_range, "neighborhood_of_set: vertex out of range");
    Bitset acc = g.closed_row(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) acc &= g.closed_row(xs[i]);
    return acc;
}

Bitset hat(const Graph& g, const std::vector<int>& xs) {
    Bitset inner = neighborhood_of_set(g, xs);
    return neighborhood_of_set(g, inner.members());
}

} // namespace pg
