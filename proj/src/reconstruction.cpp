#include "pg/reconstruction.hpp"

#include "pg/errors.hpp"
#include "pg/power_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace pg {

namespace {

// phi(p^i)
num phi_prime_power(num p, int i) {
    num v = p - 1;
    for (int k = 1; k < i; ++k) v *= p;
    return v;
}

num pow_ll(num p, int e) {
    num v = 1;
    for (int k = 0; k < e; ++k) v *= p;
    return v;
}

struct ClassifyContext {
    const Graph& g;
    const Partition& np; // N-partition of g
    int star_vertex;
};

// Shared decision procedure. Facts only: |C|, |hat C|, whether hat C is
// exactly C plus the star vertex, and (for critical classes) whether some
// class outside hat C of size <= |C| is joined to C.
NClassType classify_class(const ClassifyContext& ctx, int class_index) {
    const auto& cls = ctx.np.classes[class_index];
    NClassType out;
    if (cls.size() == 1 && cls[0] == ctx.star_vertex) {
        out.tag = NClassType::Tag::star;
        return out;
    }
    Bitset chat = hat(ctx.g, cls);
    num chat_size = chat.count();
    auto sig = detect_size_signature(static_cast<num>(cls.size()), chat_size);
    if (!sig) {
        out.tag = NClassType::Tag::first_type;
        return out;
    }
    bool chat_is_c_plus_star = chat_size == static_cast<num>(cls.size()) + 1 &&
                               chat.test(ctx.star_vertex);
    if (chat_is_c_plus_star) {
        for (int v : cls)
            if (!chat.test(v)) chat_is_c_plus_star = false;
    }
    if (!chat_is_c_plus_star) {
        out.tag = NClassType::Tag::second_type;
        out.params = *sig;
        return out;
    }
    // critical class: size arithmetic alone cannot decide; the class is of
    // the first type iff some vertex outside hat C, lying in an N-class no
    // bigger than C, is joined to C.
    out.critical = true;
    out.params = *sig; // s == 0 forced by |hat C| = |C| + 1
    int y = cls[0];
    bool first = false;
    for (int x : ctx.g.neighbors(y)) {
        if (chat.test(x)) continue;
        if (ctx.np.classes[ctx.np.class_of[x]].size() <= cls.size()) {
            first = true;
            break;
        }
    }
    out.tag = first ? NClassType::Tag::first_type : NClassType::Tag::second_type;
    return out;
}

int require_singleton_star(const Graph& g) {
    auto s = star_vertices(g);
    if (s.size() != 1)
        fail(errc::not_singleton_star,
             "operation requires a power graph with exactly one star vertex, found " +
                 std::to_string(s.size()));
    return s[0];
}

Digraph orient_via_known_group(const Graph& g, const GroupTable& G, const IsoOptions& opts) {
    Graph pg_known = power_graph(G);
    auto psi = are_isomorphic_graphs(pg_known, g, opts);
    if (!psi)
        fail(errc::not_a_power_graph_shape,
             "graph passed the star census for " + G.name() + " but is not isomorphic to its power graph");
    Digraph known = directed_power_graph(G);
    Digraph d(g.order());
    for (int x = 0; x < known.order(); ++x)
        for (int y : known.out_row(x).members()) d.add_arc((*psi)[x], (*psi)[y]);
    return d;
}

} // namespace

const char* n_class_tag_name(NClassType::Tag t) {
    switch (t) {
    case NClassType::Tag::star: return "star";
    case NClassType::Tag::first_type: return "first_type";
    case NClassType::Tag::second_type: return "second_type";
    }
    return "?";
}

std::optional<SecondTypeParams> detect_size_signature(num c_size, num chat_size) {
    if (c_size < 1 || chat_size <= c_size) return std::nullopt;
    auto pp = prime_power(chat_size);
    if (!pp || pp->second < 2) return std::nullopt;
    num p = pp->first;
    int r = pp->second;
    num diff = chat_size - c_size; // must be p^s with 0 <= s <= r-2
    int s = 0;
    while (diff % p == 0) {
        diff /= p;
        ++s;
    }
    if (diff != 1 || s > r - 2) return std::nullopt;
    return SecondTypeParams{p, r, s};
}

NClassType classify_n_class(const Graph& g, const std::vector<int>& star,
                            const std::vector<int>& cls) {
    if (star.size() != 1 || star != star_vertices(g))
        fail(errc::not_singleton_star, "classify_n_class: star set must be the singleton star of g");
    if (cls.empty()) fail(errc::not_an_n_class, "classify_n_class: empty class");
    Partition np = n_partition(g);
    int c = np.class_of[cls[0]];
    std::vector<int> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    if (np.classes[c] != sorted)
        fail(errc::not_an_n_class, "classify_n_class: the given set is not an N-class of g");
    return classify_class({g, np, star[0]}, c);
}

std::vector<std::vector<int>> split_second_type(const std::vector<int>& cls,
                                                const SecondTypeParams& t) {
    num expect = pow_ll(t.p, t.r) - pow_ll(t.p, t.s);
    if (static_cast<num>(cls.size()) != expect)
        fail(errc::size_mismatch, "split_second_type: class size does not match the parameters");
    std::vector<int> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> out;
    std::size_t at = 0;
    for (int i = t.s + 1; i <= t.r; ++i) {
        auto take = static_cast<std::size_t>(phi_prime_power(t.p, i));
        out.emplace_back(sorted.begin() + at, sorted.begin() + at + take);
        at += take;
    }
    return out;
}

DiamondExtraction diamond_from_power_graph(const Graph& g) {
    int star = require_singleton_star(g);
    Partition np = n_partition(g);
    ClassifyContext ctx{g, np, star};

    std::vector<int> labels(g.order(), -1);
    std::vector<num> order_of(g.order(), 0);
    for (int c = 0; c < np.size(); ++c) {
        NClassType t = classify_class(ctx, c);
        switch (t.tag) {
        case NClassType::Tag::star:
            labels[star] = star;
            order_of[star] = 1;
            break;
        case NClassType::Tag::first_type:
            for (int v : np.classes[c]) labels[v] = np.classes[c][0];
            break;
        case NClassType::Tag::second_type: {
            auto parts = split_second_type(np.classes[c], t.params);
            for (std::size_t k = 0; k < parts.size(); ++k) {
                num o = pow_ll(t.params.p, t.params.s + 1 + static_cast<int>(k));
                for (int v : parts[k]) {
                    labels[v] = parts[k][0];
                    order_of[v] = o;
                }
            }
            break;
        }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (labels[v] < 0) fail(errc::classification_failed, "diamond extraction left a vertex untyped");

    DiamondExtraction out;
    out.partition = make_partition(g.order(), labels);
    out.identity = star;
    out.intended_order.resize(out.partition.size());
    for (int c = 0; c < out.partition.size(); ++c)
        out.intended_order[c] = order_of[out.partition.classes[c][0]];
    return out;
}

Digraph orient(const Graph& g, const IsoOptions& opts) {
    StarCase sc = classify_star_case(g);
    num n = g.order();
    switch (sc.kind) {
    case StarCaseKind::complete_cyclic_prime_power:
        // complete graph; the identity relabelling works
        return directed_power_graph(build_group(GroupSpec::Cyclic(n)));
    case StarCaseKind::cyclic_non_prime_power:
        return orient_via_known_group(g, build_group(GroupSpec::Cyclic(n)), opts);
    case StarCaseKind::generalized_quaternion:
        if (n < 8 || n % 4 != 0)
            fail(errc::not_a_power_graph_shape,
                 "two star vertices but the order fits no generalized quaternion group");
        return orient_via_known_group(g, build_group(GroupSpec::GeneralizedQuaternion(n)), opts);
    case StarCaseKind::singleton_star:
        break;
    }

    DiamondExtraction ex = diamond_from_power_graph(g);
    const Partition& dp = ex.partition;
    int star_class = dp.class_of[ex.identity];

    // classes joined to an involution: a non-star singleton class
    std::vector<char> involution_adjacent(dp.size(), 0);
    for (int c = 0; c < dp.size(); ++c) {
        if (c == star_class || dp.classes[c].size() != 1) continue;
        for (int w : g.neighbors(dp.classes[c][0])) involution_adjacent[dp.class_of[w]] = 1;
    }

    Digraph d(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int cu = dp.class_of[u], cv = dp.class_of[v];
            if (cu == cv) {
                d.add_arc(u, v);
                d.add_arc(v, u);
                continue;
            }
            std::size_t su = dp.classes[cu].size(), sv = dp.classes[cv].size();
            if (su > sv) {
                d.add_arc(u, v);
            } else if (sv > su) {
                d.add_arc(v, u);
            } else if (su == 1) {
                // one must be the identity class, the other an involution
                if (cu == star_class) d.add_arc(v, u);
                else if (cv == star_class) d.add_arc(u, v);
                else
                    fail(errc::not_a_power_graph_shape,
                         "two joined singleton classes, neither of them the star class");
            } else {
                bool au = involution_adjacent[cu], av = involution_adjacent[cv];
                if (au == av)
                    fail(errc::orientation_ambiguous,
                         std::string("equal-size joined classes with ") +
                             (au ? "two" : "no") + " involution-adjacent sides");
                if (au) d.add_arc(u, v);
                else d.add_arc(v, u);
            }
        }
    }
    return d;
}

std::vector<NClassReport> classify_all_n_classes(const Graph& g) {
    int star = require_singleton_star(g);
    Partition np = n_partition(g);
    ClassifyContext ctx{g, np, star};
    std::vector<NClassReport> out;
    for (int c = 0; c < np.size(); ++c) {
        NClassReport r;
        r.members = np.classes[c];
        r.chat_size = hat(g, np.classes[c]).count();
        r.type = classify_class(ctx, c);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SparseCriticalClass> scan_critical_classes(const GroupTable& G) {
    const int n = G.order();
    auto adj = power_graph_adjacency(G);

    std::vector<std::vector<int>> closed(n);
    int star_vertex = -1;
    int star_count = 0;
    for (int v = 0; v < n; ++v) {
        closed[v].reserve(adj[v].size() + 1);
        closed[v] = adj[v];
        closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
        if (static_cast<int>(adj[v].size()) == n - 1) {
            star_vertex = v;
            ++star_count;
        }
    }
    if (star_count != 1)
        fail(errc::not_singleton_star,
             "critical-class scan requires a singleton star set, found " + std::to_string(star_count));

    // N-partition through hashed closed neighbor lists
    auto list_hash = [](const std::vector<int>& xs) {
        std::size_t h = 1469598103934665603ull;
        for (int x : xs) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    };
    std::unordered_map<std::size_t, std::vector<int>> buckets;
    std::vector<int> labels(n, -1);
    for (int v = 0; v < n; ++v) {
        auto& bucket = buckets[list_hash(closed[v])];
        int found = -1;
        for (int u : bucket)
            if (closed[u] == closed[v]) {
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
    Partition np = make_partition(n, labels);

    auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    std::vector<SparseCriticalClass> out;
    for (int c = 0; c < np.size(); ++c) {
        const auto& cls = np.classes[c];
        int y = cls[0];
        if (y == star_vertex) continue;
        // hat C = ∩_{z ∈ N[y]} N[z]
        std::vector<int> chat = closed[y];
        for (int z : closed[y]) {
            if (z == y) continue;
            chat = intersect(chat, closed[z]);
            if (chat.size() <= cls.size() + 1) break; // cannot shrink below C ∪ {1}
        }
        num chat_size = static_cast<num>(chat.size());
        auto sig = detect_size_signature(static_cast<num>(cls.size()), chat_size);
        if (!sig) continue;
        // critical means hat C = C ∪ {1}
        std::vector<int> expect = cls;
        expect.insert(std::lower_bound(expect.begin(), expect.end(), star_vertex), star_vertex);
        if (chat != expect) continue;

        SparseCriticalClass sc;
        sc.members = cls;
        sc.chat_size = chat_size;
        sc.type.critical = true;
        sc.type.params = *sig;
        bool first = false;
        for (int x : adj[y]) {
            if (std::binary_search(chat.begin(), chat.end(), x)) continue;
            if (np.classes[np.class_of[x]].size() <= cls.size()) {
                first = true;
                break;
            }
        }
        sc.type.tag = first ? NClassType::Tag::first_type : NClassType::Tag::second_type;
        out.push_back(std::move(sc));
    }
    return out;
}

} // namespace pg
