#include "pg/recognition.hpp"

#include "pg/errors.hpp"
#include "pg/relations.hpp"

#include <algorithm>

namespace pg {

namespace {

num pow_ll(num p, int e) {
    num v = 1;
    for (int k = 0; k < e; ++k) v *= p;
    return v;
}

void require_transitive(const Digraph& d, const char* who) {
    if (!is_transitive(d))
        fail(errc::not_transitive, std::string(who) + ": digraph is not transitive");
}

} // namespace

Partition diamond_partition_from_digraph(const Digraph& d) {
    require_transitive(d, "diamond_partition_from_digraph");
    // x ~ y iff x == y or both arcs present; transitivity of the digraph
    // makes this an equivalence
    std::vector<int> labels(d.order(), -1);
    for (int v = 0; v < d.order(); ++v) {
        if (labels[v] >= 0) continue;
        labels[v] = v;
        for (int w : d.out_row(v).members())
            if (d.arc(w, v)) labels[w] = v;
    }
    return make_partition(d.order(), labels);
}

std::vector<int> ClassPoset::proper_classes() const {
    std::vector<int> out;
    for (int c = 0; c < classes.size(); ++c)
        if (c != identity_class) out.push_back(c);
    return out;
}

std::vector<int> ClassPoset::minimal_below(int c) const {
    std::vector<int> out;
    for (int m = 0; m < classes.size(); ++m) {
        if (m == identity_class || !le(m, c)) continue;
        bool minimal = true;
        for (int u = 0; u < classes.size() && minimal; ++u)
            if (u != m && u != identity_class && le(u, m)) minimal = false;
        if (minimal) out.push_back(m);
    }
    return out;
}

ClassPoset class_poset(const Digraph& d) {
    ClassPoset out;
    out.classes = diamond_partition_from_digraph(d);
    int k = out.classes.size();
    out.leq.assign(k, Bitset(k));
    for (int c = 0; c < k; ++c) out.leq[c].set(c);
    for (int x = 0; x < d.order(); ++x)
        for (int y : d.out_row(x).members()) {
            int cx = out.classes.class_of[x], cy = out.classes.class_of[y];
            if (cx != cy) out.leq[cy].set(cx); // arc x -> y puts [y] below [x]
        }
    // identity class: the unique global minimum of size 1
    for (int c = 0; c < k; ++c) {
        if (out.classes.classes[c].size() != 1) continue;
        bool below_all = true;
        for (int u = 0; u < k && below_all; ++u)
            if (!out.leq[c].test(u)) below_all = false;
        if (below_all) {
            out.identity_class = c;
            break;
        }
    }
    return out;
}

std::vector<num> element_orders_from_digraph(const Digraph& d) {
    ClassPoset poset = class_poset(d);
    const Partition& dp = poset.classes;

    if (d.order() == 1) return {1};
    // the identity must exist: unique sink class of size 1 below everything
    if (poset.identity_class < 0)
        fail(errc::not_a_power_digraph_shape,
             "no unique global-minimum singleton class (identity) found");

    std::vector<num> order_of_class(dp.size(), 0);
    order_of_class[poset.identity_class] = 1;
    for (int c = 0; c < dp.size(); ++c) {
        if (c == poset.identity_class) continue;
        num cls_size = static_cast<num>(dp.classes[c].size());
        std::vector<num> primes;
        for (int m : poset.minimal_below(c)) {
            num p = static_cast<num>(dp.classes[m].size()) + 1;
            if (!is_prime(p))
                fail(errc::not_a_power_digraph_shape,
                     "minimal class of size " + std::to_string(p - 1) + " is not prime minus one");
            primes.push_back(p);
        }
        std::sort(primes.begin(), primes.end());
        if (primes.empty() || std::adjacent_find(primes.begin(), primes.end()) != primes.end())
            fail(errc::not_a_power_digraph_shape, "invalid set of minimal classes below a class");
        num denom = 1;
        for (num p : primes) denom *= (p - 1);
        if (cls_size % denom != 0)
            fail(errc::not_a_power_digraph_shape, "class size not divisible by prod(p - 1)");
        num rest = cls_size / denom; // must be prod p_i^{a_i - 1}
        num n = 1;
        for (num p : primes) {
            int a = 1;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            n *= pow_ll(p, a);
        }
        if (rest != 1)
            fail(errc::not_a_power_digraph_shape, "class size has prime factors outside the minimal classes");
        order_of_class[c] = n;
    }

    std::vector<num> out(d.order());
    for (int v = 0; v < d.order(); ++v) out[v] = order_of_class[dp.class_of[v]];
    return out;
}

std::vector<num> sylow_decomposition_from_order_counts(const std::map<num, num>& counts, num p) {
    if (!is_prime(p)) fail(errc::invalid_params, "sylow decomposition: p must be prime");
    // D(i) = #elements of order dividing p^i (with identity); must be p^{e_i}
    // with e_i = sum_j min(lambda_j, i). m_i = e_i - e_{i-1} counts factors of
    // size >= p^i and must be non-increasing.
    int max_i = 0;
    num total = 1;
    for (auto [o, c] : counts) {
        num rest = o;
        int i = 0;
        while (rest % p == 0) {
            rest /= p;
            ++i;
        }
        if (rest != 1 || i == 0 || c < 1)
            fail(errc::inconsistent_counts, "order census contains a non-p-power order");
        max_i = std::max(max_i, i);
        total += c;
    }
    std::vector<num> e(max_i + 1, 0);
    num running = 1;
    for (int i = 1; i <= max_i; ++i) {
        auto it = counts.find(pow_ll(p, i));
        running += (it == counts.end() ? 0 : it->second);
        num d = running;
        int ei = 0;
        while (d % p == 0) {
            d /= p;
            ++ei;
        }
        if (d != 1)
            fail(errc::inconsistent_counts,
                 "element count of order dividing p^" + std::to_string(i) + " is not a power of p");
        e[i] = ei;
    }
    std::vector<num> m(max_i + 2, 0);
    for (int i = 1; i <= max_i; ++i) m[i] = e[i] - e[i - 1];
    for (int i = 1; i <= max_i; ++i)
        if (m[i] < 0 || (i > 1 && m[i] > m[i - 1]))
            fail(errc::inconsistent_counts, "order census is not realizable by an abelian p-group");
    std::vector<num> factors;
    for (int i = 1; i <= max_i; ++i)
        for (num k = 0; k < m[i] - m[i + 1]; ++k) factors.push_back(pow_ll(p, i));
    std::sort(factors.begin(), factors.end());
    // census of the factor product must reproduce the input exactly
    num check = 1;
    for (num f : factors) check *= f;
    if (check != total)
        fail(errc::inconsistent_counts, "reconstructed factors do not account for every element");
    return factors;
}

namespace {

std::vector<num> abelian_invariants_impl(const Graph& g);

// Label the Sylow-p elements of a non-cyclic abelian power graph by order.
// Returns per-vertex p-power order (0 for vertices outside the Sylow set).
std::vector<num> label_sylow(const Graph& g, const Partition& dp, int star, num p) {
    int n = g.order();
    std::vector<num> label(n, 0);
    label[star] = 1;

    // order-3 witnesses for the p = 2 branch: size-2 classes with no
    // neighbors in a non-star singleton class
    std::vector<char> order3(n, 0);
    if (p == 2) {
        std::vector<char> involution(n, 0);
        for (int c = 0; c < dp.size(); ++c)
            if (dp.classes[c].size() == 1 && dp.classes[c][0] != star)
                involution[dp.classes[c][0]] = 1;
        for (int c = 0; c < dp.size(); ++c) {
            if (dp.classes[c].size() != 2) continue;
            bool clean = true;
            for (int v : dp.classes[c])
                for (int w : g.neighbors(v))
                    if (involution[w]) clean = false;
            if (clean)
                for (int v : dp.classes[c]) order3[v] = 1;
        }
    }

    num target = p - 1; // class size phi(p^i)
    num subgroup = 1;   // p^{i-1}, the required neighbor count
    for (int i = 1;; ++i) {
        bool found = false;
        for (int c = 0; c < dp.size(); ++c) {
            const auto& cls = dp.classes[c];
            if (static_cast<num>(cls.size()) != target) continue;
            if (label[cls[0]] != 0 || cls[0] == star) continue;
            bool all_ok = true;
            for (int v : cls) {
                num small_neighbors = 0;
                bool near_order3 = false;
                for (int w : g.neighbors(v)) {
                    if (label[w] > 0 && label[w] <= subgroup) ++small_neighbors;
                    if (p == 2 && order3[w]) near_order3 = true;
                }
                // the label set of orders dividing p^{i-1} has p^{i-1}
                // members, one of them the identity
                if (small_neighbors != subgroup || near_order3) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) {
                found = true;
                for (int v : cls) label[v] = subgroup * p; // order p^i
            }
        }
        if (!found) break;
        target *= p;
        subgroup *= p;
    }
    return label;
}

std::vector<num> abelian_invariants_impl(const Graph& g) {
    num n = g.order();
    if (n == 1) return {};
    StarCase sc = classify_star_case(g);
    if (sc.kind == StarCaseKind::generalized_quaternion)
        fail(errc::inconsistent_counts, "star census contradicts an abelian group");
    if (sc.kind != StarCaseKind::singleton_star) {
        // cyclic of order n
        std::vector<num> out;
        for (auto [p, e] : factorize(n)) {
            num pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            out.push_back(pe);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // non-cyclic abelian: N-classes are diamond classes
    Partition dp = n_partition(g);
    int star = sc.star_set[0];
    auto fact = factorize(n);
    num p = fact.front().first;

    std::vector<num> label = label_sylow(g, dp, star, p);
    std::map<num, num> counts;
    num sylow_size = 1;
    for (int v = 0; v < g.order(); ++v)
        if (label[v] > 1) {
            ++counts[label[v]];
            ++sylow_size;
        }
    if (counts.empty())
        fail(errc::inconsistent_counts, "no elements of the smallest prime order found");
    std::vector<num> invariants = sylow_decomposition_from_order_counts(counts, p);

    // complement: vertices with no labeled neighbor except the identity
    std::vector<int> hv;
    for (int v = 0; v < g.order(); ++v) {
        if (label[v] > 1) continue;
        if (v == star) {
            hv.push_back(v);
            continue;
        }
        bool clean = true;
        for (int w : g.neighbors(v))
            if (label[w] > 1) {
                clean = false;
                break;
            }
        if (clean) hv.push_back(v);
    }
    if (sylow_size * static_cast<num>(hv.size()) != n)
        fail(errc::inconsistent_counts,
             "Sylow subgraph and its complement do not factor the vertex count");
    if (hv.size() > 1) {
        auto sub = induced_subgraph(g, hv);
        auto rest = abelian_invariants_impl(sub.graph);
        invariants.insert(invariants.end(), rest.begin(), rest.end());
    }
    std::sort(invariants.begin(), invariants.end());
    return invariants;
}

} // namespace

std::vector<num> abelian_invariants_from_power_graph(const Graph& g) {
    return abelian_invariants_impl(g);
}

} // namespace pg
