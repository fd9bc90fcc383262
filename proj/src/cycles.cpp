#include "pg/cycles.hpp"

#include "pg/errors.hpp"
#include "pg/power_graph.hpp"
#include "pg/recognition.hpp"
#include "pg/relations.hpp"

#include <algorithm>

namespace pg {

std::vector<std::vector<int>> maximal_directed_cycles(const Digraph& d) {
    Partition dp = diamond_partition_from_digraph(d); // checks transitivity
    std::vector<std::vector<int>> out;
    for (const auto& cls : dp.classes)
        if (cls.size() >= 3) out.push_back(cls);
    return out;
}

std::vector<int> hamiltonian_cycle_power_cyclic(num n) {
    if (n < 3) fail(errc::invalid_n, "hamiltonian_cycle_power_cyclic: n must be >= 3");
    GroupTable G = build_group(GroupSpec::Cyclic(n));
    std::vector<int> all(G.order());
    for (int i = 0; i < G.order(); ++i) all[i] = i;
    if (prime_power(n)) return all; // complete graph, any ordering closes

    Graph g = power_graph(G);
    Partition dp = diamond_partition_from_group(G);
    Graph q = quotient(g, dp);

    // hamiltonian cycle of the class quotient by plain backtracking; the
    // quotient of a cyclic group's power graph always has one
    int k = q.order();
    std::vector<int> seq{0};
    std::vector<char> used(k, 0);
    used[0] = 1;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (static_cast<int>(seq.size()) == k) return q.adjacent(v, seq[0]);
        for (int w = 0; w < k; ++w) {
            if (used[w] || !q.adjacent(v, w)) continue;
            used[w] = 1;
            seq.push_back(w);
            if (self(self, w)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        fail(errc::quotient_search_failed,
             "internal error: class quotient of a cyclic power graph has no hamiltonian cycle");

    std::vector<int> cycle;
    cycle.reserve(G.order());
    for (int c : seq)
        for (int v : dp.classes[c]) cycle.push_back(v);
    return cycle;
}

std::vector<int> hamiltonian_directed_path_prime_power(num p, int k) {
    if (!is_prime(p) || k < 1)
        fail(errc::invalid_params, "hamiltonian_directed_path_prime_power: need p prime, k >= 1");
    num n = 1;
    for (int i = 0; i < k; ++i) {
        n *= p;
        if (n > kDefaultOrderCap) fail(errc::too_large, "p^k exceeds the order cap");
    }
    GroupTable G = build_group(GroupSpec::Cyclic(n));
    std::vector<int> ids(G.order());
    for (int i = 0; i < G.order(); ++i) ids[i] = i;
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return G.element_order(a) > G.element_order(b);
    });
    return ids;
}

std::vector<int> close_cycle_over_n_classes(const Graph& g, const std::vector<int>& cycle) {
    auto valid = [&](const std::vector<int>& c) {
        if (c.size() < 3) return false;
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        if (sorted.front() < 0 || sorted.back() >= g.order()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
        return true;
    };
    if (!valid(cycle)) fail(errc::not_a_cycle, "close_cycle_over_n_classes: input is not a cycle of g");

    Partition np = n_partition(g);
    std::vector<int> cur = cycle;
    std::vector<char> in_cycle(g.order(), 0);
    for (int v : cur) in_cycle[v] = 1;

    // splice every missing class member right after a representative already
    // on the cycle; class members induce a complete subgraph and share
    // neighborhoods, so the result stays a cycle
    for (std::size_t i = 0; i < cur.size(); ++i) {
        int x = cur[i];
        const auto& cls = np.classes[np.class_of[x]];
        std::vector<int> missing;
        for (int m : cls)
            if (!in_cycle[m]) missing.push_back(m);
        if (missing.empty()) continue;
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, missing.begin(), missing.end());
        for (int m : missing) in_cycle[m] = 1;
    }
    return cur;
}

num n_weight(const Partition& p, int class_index) {
    if (class_index < 0 || class_index >= p.size())
        fail(errc::out_of_range, "n_weight: class index out of range");
    return static_cast<num>(p.classes[class_index].size());
}

num n_weight(const Partition& p, const std::vector<int>& class_indices) {
    num total = 0;
    for (int c : class_indices) total += n_weight(p, c);
    return total;
}

namespace {

std::vector<int> canonical_path(const std::vector<int>& p) {
    std::vector<int> rev(p.rbegin(), p.rend());
    return std::min(p, rev);
}

} // namespace

WeightedPathResult max_weight_path(const Graph& gq, const std::vector<num>& weights,
                                   int budget_vertices) {
    int n = gq.order();
    if (n > budget_vertices)
        fail(errc::too_large, "max_weight_path: quotient exceeds the search budget");
    if (static_cast<int>(weights.size()) != n)
        fail(errc::invalid_params, "max_weight_path: one weight per vertex required");

    num total = 0;
    for (num w : weights) total += w;

    WeightedPathResult best;
    std::vector<int> path;
    std::vector<char> used(n, 0);
    num cur = 0;

    auto consider = [&]() {
        if (cur > best.weight ||
            (cur == best.weight && (best.path.empty() || canonical_path(path) < canonical_path(best.path)))) {
            best.weight = cur;
            best.path = canonical_path(path);
        }
    };
    auto dfs = [&](auto&& self, int v, num remaining) -> void {
        consider();
        for (int w : gq.neighbors(v)) {
            if (used[w]) continue;
            if (cur + remaining < best.weight) return; // nothing better left
            used[w] = 1;
            path.push_back(w);
            cur += weights[w];
            self(self, w, remaining - weights[w]);
            cur -= weights[w];
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        path.push_back(s);
        cur = weights[s];
        dfs(dfs, s, total - weights[s]);
        path.pop_back();
        used[s] = 0;
    }
    return best;
}

CycleBounds cycle_bounds(const GroupTable& G) {
    if (G.order() < 3) fail(errc::too_small, "cycle_bounds: |G| must be >= 3");
    num max_order = 0;
    for (int v = 0; v < G.order(); ++v)
        max_order = std::max(max_order, static_cast<num>(G.element_order(v)));

    auto proper = proper_power_graph(G);
    Partition np = n_partition(proper.graph);
    Graph q = quotient(proper.graph, np);
    std::vector<num> weights(np.size());
    for (int c = 0; c < np.size(); ++c) weights[c] = static_cast<num>(np.classes[c].size());
    auto best = max_weight_path(q, weights);
    return {max_order, best.weight + 1};
}

int longest_cycle_oracle(const Graph& g, int max_n) {
    if (g.order() > max_n) fail(errc::too_large, "longest_cycle_oracle: graph too large");
    int n = g.order();
    int best = 0;
    std::vector<char> used(n, 0);

    // cycles are enumerated with their smallest vertex first
    auto dfs = [&](auto&& self, int s, int v, int len, int free_count) -> void {
        if (len >= 3 && g.adjacent(v, s)) best = std::max(best, len);
        if (len + free_count <= best) return;
        for (int w : g.neighbors(v)) {
            if (w <= s || used[w]) continue;
            used[w] = 1;
            self(self, s, w, len + 1, free_count - 1);
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        dfs(dfs, s, s, 1, n - s - 1);
        used[s] = 0;
    }
    return best;
}

} // namespace pg
