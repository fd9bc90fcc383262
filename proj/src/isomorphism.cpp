#include "pg/isomorphism.hpp"

#include "pg/errors.hpp"

#include <algorithm>
#include <chrono>

namespace pg {

namespace {

using Clock = std::chrono::steady_clock;

// Iterated neighborhood-color refinement (1-WL). For digraphs the signature
// keeps in- and out-neighbor colors separate. Colors are canonical: they only
// depend on the isomorphism class of the (di)graph.
template <typename NeighborsFn>
std::vector<int> refine_colors(int n, const std::vector<int>& initial, NeighborsFn&& neigh) {
    std::vector<int> col = initial;
    for (int round = 0; round < n; ++round) {
        // signature: own color + sorted neighbor colors (per direction)
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = neigh(v, col);
            sig[v].first.insert(sig[v].first.begin(), col[v]);
            sig[v].second = v;
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

std::vector<int> graph_colors(const Graph& g) {
    std::vector<int> init(g.order());
    for (int v = 0; v < g.order(); ++v) init[v] = g.degree(v);
    // normalize initial colors to small ids
    {
        auto sorted = init;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : init)
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    }
    return refine_colors(g.order(), init, [&](int v, const std::vector<int>& col) {
        std::vector<int> ncols;
        for (int w : g.neighbors(v)) ncols.push_back(col[w]);
        std::sort(ncols.begin(), ncols.end());
        return ncols;
    });
}

std::vector<int> digraph_colors(const Digraph& d) {
    // initial colors must be canonical: rank of the sorted (out, in) pair
    std::vector<std::pair<int, int>> keys(d.order());
    for (int v = 0; v < d.order(); ++v) keys[v] = {d.out_degree(v), d.in_degree(v)};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> init(d.order());
    for (int v = 0; v < d.order(); ++v)
        init[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                   sorted.begin());
    return refine_colors(d.order(), init, [&](int v, const std::vector<int>& col) {
        std::vector<int> ncols;
        for (int w : d.out_row(v).members()) ncols.push_back(col[w]);
        std::sort(ncols.begin(), ncols.end());
        ncols.push_back(-1); // separator between out and in colors
        std::vector<int> in;
        for (int w : d.in_row(v).members()) in.push_back(col[w]);
        std::sort(in.begin(), in.end());
        ncols.insert(ncols.end(), in.begin(), in.end());
        return ncols;
    });
}

bool same_color_histogram(const std::vector<int>& a, const std::vector<int>& b) {
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

// Generic lexicographic backtracking: vertices of a are assigned in id order,
// candidates tried in ascending id, so the first witness found is the
// lexicographically least mapping.
template <typename ConsistentFn>
std::optional<std::vector<int>> backtrack(int n, const std::vector<int>& color_a,
                                          const std::vector<int>& color_b,
                                          ConsistentFn&& consistent, const IsoOptions& opts) {
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto deadline = Clock::now() + std::chrono::milliseconds(opts.budget_ms);
    long long steps = 0;

    // iterative DFS over candidate choices
    std::vector<int> next_candidate(n + 1, 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) return map;
        if ((++steps & 0x3ff) == 0 && Clock::now() > deadline)
            fail(errc::timeout, "isomorphism search exceeded its time budget");
        int& cand = next_candidate[v];
        bool advanced = false;
        while (cand < n) {
            int w = cand++;
            if (used[w] || color_a[v] != color_b[w]) continue;
            if (!consistent(v, w, map)) continue;
            map[v] = w;
            used[w] = 1;
            ++v;
            next_candidate[v] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            --v;
            if (v >= 0) {
                used[map[v]] = 0;
                map[v] = -1;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic_graphs(const Graph& a, const Graph& b,
                                                      const IsoOptions& opts) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.edge_count() != b.edge_count()) return std::nullopt;
    auto ca = graph_colors(a);
    auto cb = graph_colors(b);
    if (!same_color_histogram(ca, cb)) return std::nullopt;
    auto consistent = [&](int v, int w, const std::vector<int>& map) {
        for (int u = 0; u < v; ++u)
            if (a.adjacent(u, v) != b.adjacent(map[u], w)) return false;
        return true;
    };
    return backtrack(a.order(), ca, cb, consistent, opts);
}

std::optional<std::vector<int>> are_isomorphic_digraphs(const Digraph& a, const Digraph& b,
                                                        const IsoOptions& opts) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.arc_count() != b.arc_count()) return std::nullopt;
    auto ca = digraph_colors(a);
    auto cb = digraph_colors(b);
    if (!same_color_histogram(ca, cb)) return std::nullopt;
    auto consistent = [&](int v, int w, const std::vector<int>& map) {
        for (int u = 0; u < v; ++u) {
            if (a.arc(u, v) != b.arc(map[u], w)) return false;
            if (a.arc(v, u) != b.arc(w, map[u])) return false;
        }
        return true;
    };
    return backtrack(a.order(), ca, cb, consistent, opts);
}

} // namespace pg
