#include "pg/verify.hpp"

#include "pg/catalog.hpp"
#include "pg/cycles.hpp"
#include "pg/errors.hpp"
#include "pg/io.hpp"
#include "pg/isomorphism.hpp"
#include "pg/power_graph.hpp"
#include "pg/quotients.hpp"
#include "pg/recognition.hpp"
#include "pg/reconstruction.hpp"
#include "pg/relations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace pg {

namespace {

struct GroupCtx {
    std::string name;
    GroupTable G;
    Graph P;
    Digraph D;
};

std::vector<GroupCtx> build_contexts(const std::vector<std::string>& names) {
    std::vector<GroupCtx> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        GroupCtx c;
        c.name = n;
        c.G = build_named_group(n);
        c.P = power_graph(c.G);
        c.D = directed_power_graph(c.G);
        out.push_back(std::move(c));
    }
    return out;
}

using PerGroup = std::function<std::optional<std::string>(const GroupCtx&)>;

CheckResult over_groups(const std::string& law, const std::vector<GroupCtx>& ctxs,
                        const PerGroup& fn) {
    for (const auto& c : ctxs) {
        std::optional<std::string> bad;
        try {
            bad = fn(c);
        } catch (const error& e) {
            bad = std::string(errc_name(e.code())) + ": " + e.what();
        }
        if (bad) return {law, false, c.name + ": " + *bad};
    }
    return {law, true, "over " + std::to_string(ctxs.size()) + " groups"};
}

bool is_cyclic_group(const GroupTable& G) {
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) == G.order()) return true;
    return false;
}

bool is_abelian_group(const GroupTable& G) {
    for (int a = 0; a < G.order(); ++a)
        for (int b = a + 1; b < G.order(); ++b)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

int involution_count(const GroupTable& G) {
    int c = 0;
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) == 2) ++c;
    return c;
}

std::vector<int> seeded_shuffle(int n, unsigned seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order(), g.loops_implicit());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out.add_edge(perm[u], perm[v]);
    return out;
}

std::string show_class_sizes(const Partition& p) {
    std::map<std::size_t, int> hist;
    for (const auto& c : p.classes) ++hist[c.size()];
    std::ostringstream os;
    for (auto [s, k] : hist) os << k << "x" << s << " ";
    return os.str();
}

} // namespace

std::vector<CheckResult> verify_phi_identities() {
    std::vector<CheckResult> out;
    {
        bool ok = true;
        std::string detail = "n up to 10000";
        for (num n = 1; n <= 10000 && ok; ++n) {
            num sum = 0;
            for (num d = 1; d * d <= n; ++d) {
                if (n % d) continue;
                sum += euler_phi(d);
                if (d != n / d) sum += euler_phi(n / d);
            }
            if (sum != n) {
                ok = false;
                detail = "divisor-phi sum fails at n=" + std::to_string(n);
            }
        }
        out.push_back({"sum of phi over divisors equals n", ok, detail});
    }
    {
        bool ok = true;
        std::string detail = "m up to 10000";
        for (num m = 1; m <= 10000 && ok; ++m) {
            num phi = euler_phi(m);
            if ((phi == 1) != (m == 1 || m == 2)) {
                ok = false;
                detail = "phi=1 classification fails at m=" + std::to_string(m);
            }
            if ((phi % 2 == 1) != (phi == 1)) {
                ok = false;
                detail = "odd-phi classification fails at m=" + std::to_string(m);
            }
        }
        out.push_back({"phi is 1 exactly on {1,2} and odd only there", ok, detail});
    }
    {
        bool ok = true;
        std::string detail = "divisor pairs with n up to 2000";
        for (num n = 1; n <= 2000 && ok; ++n) {
            for (num m = 1; m <= n && ok; ++m) {
                if (n % m) continue;
                auto pd = phi_divides(m, n);
                num pm = euler_phi(m), pn = euler_phi(n);
                if (pn % pm != 0) {
                    ok = false;
                    detail = "phi(m) does not divide phi(n) at m=" + std::to_string(m) +
                             ", n=" + std::to_string(n);
                } else if ((pm == pn) != pd.equal) {
                    ok = false;
                    detail = "equality predicate fails at m=" + std::to_string(m) +
                             ", n=" + std::to_string(n);
                }
            }
        }
        out.push_back({"phi divides along divisibility with the stated equality cases", ok, detail});
    }
    return out;
}

std::vector<CheckResult> verify_group_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups(
        "cyclic subgroup size equals element order, which divides |G|", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            for (int g = 0; g < c.G.order(); ++g) {
                if (static_cast<int>(c.G.cyclic_subgroup(g).size()) != c.G.element_order(g))
                    return "subgroup size mismatch at " + std::to_string(g);
                if (c.G.order() % c.G.element_order(g) != 0)
                    return "order does not divide |G| at " + std::to_string(g);
            }
            if (c.G.element_order(c.G.identity()) != 1) return "identity order != 1";
            return std::nullopt;
        }));

    out.push_back(over_groups("group axioms hold", ctxs,
                              [](const GroupCtx& c) -> std::optional<std::string> {
                                  std::string why = check_group_axioms(c.G);
                                  if (!why.empty()) return why;
                                  return std::nullopt;
                              }));

    {
        std::vector<GroupCtx> quats;
        for (auto& c : ctxs)
            if (c.name == "Q8" || c.name == "Q16" || c.name == "Q32") quats.push_back(c);
        out.push_back(over_groups("generalized quaternion 2-groups have a unique involution", quats,
                                  [](const GroupCtx& c) -> std::optional<std::string> {
                                      int k = involution_count(c.G);
                                      if (k != 1) return std::to_string(k) + " involutions";
                                      return std::nullopt;
                                  }));
    }

    {
        // element orders in a direct product are lcms of component orders
        bool ok = true;
        std::string detail;
        std::vector<std::pair<std::vector<num>, std::string>> products = {
            {{2, 4}, "C2xC4"}, {{2, 10}, "C2xC10"}, {{6, 2}, "C6xC2"}, {{3, 3, 3}, "C3xC3xC3"}};
        for (auto& [factors, name] : products) {
            GroupTable G = build_named_group(name);
            num total = 1;
            for (num f : factors) total *= f;
            if (G.order() != total) {
                ok = false;
                detail = name + ": order is not the product of factor orders";
                break;
            }
            std::map<num, int> expect, got;
            // enumerate component tuples in the same mixed-radix order
            for (int id = 0; id < G.order(); ++id) {
                num o = 1;
                num rem = id;
                for (std::size_t i = factors.size(); i-- > 0;) {
                    num d = rem % factors[i];
                    rem /= factors[i];
                    o = lcm_ll(o, factors[i] / gcd_ll(factors[i], d));
                }
                ++expect[o];
                ++got[G.element_order(id)];
            }
            if (expect != got) {
                ok = false;
                detail = name + ": lcm order census mismatch";
                break;
            }
        }
        out.push_back({"direct product orders are lcms of component orders", ok, detail});
    }

    return out;
}

std::vector<CheckResult> verify_power_graph_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups("degree is at least element order minus one", ctxs,
                              [](const GroupCtx& c) -> std::optional<std::string> {
                                  for (int v = 0; v < c.P.order(); ++v)
                                      if (c.P.degree(v) < c.G.element_order(v) - 1)
                                          return "fails at element " + std::to_string(v);
                                  return std::nullopt;
                              }));

    out.push_back(over_groups("underlying graph of the directed power graph is the power graph",
                              ctxs, [](const GroupCtx& c) -> std::optional<std::string> {
                                  if (!(underlying_undirected(c.D) == c.P)) return "mismatch";
                                  return std::nullopt;
                              }));

    out.push_back(over_groups("directed power graph is transitive", ctxs,
                              [](const GroupCtx& c) -> std::optional<std::string> {
                                  if (!is_transitive(c.D)) return "not transitive";
                                  return std::nullopt;
                              }));

    out.push_back(over_groups(
        "power graph complete exactly for cyclic groups of prime power order", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            bool complete = c.P.edge_count() ==
                            static_cast<std::size_t>(c.P.order()) * (c.P.order() - 1) / 2;
            bool expect = is_cyclic_group(c.G) &&
                          (c.G.order() == 1 || prime_power(c.G.order()).has_value());
            if (complete != expect) return complete ? "unexpectedly complete" : "unexpectedly incomplete";
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "induced subgraph on a cyclic subgroup is that subgroup's power graph", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            int best = c.G.identity();
            for (int g = 0; g < c.G.order(); ++g)
                if (c.G.element_order(g) > c.G.element_order(best)) best = g;
            auto sub = induced_subgraph(c.P, c.G.cyclic_subgroup(best));
            Graph expect = power_graph(build_group(GroupSpec::Cyclic(c.G.element_order(best))));
            if (!are_isomorphic_graphs(sub.graph, expect))
                return "max-order subgroup fails at element " + std::to_string(best);
            return std::nullopt;
        }));

    {
        // relabelling the group by a bijection preserves both graphs
        std::vector<GroupCtx> small;
        for (auto& c : ctxs)
            if (c.G.order() <= 32) small.push_back(c);
        out.push_back(over_groups(
            "group relabelling yields isomorphic power graphs", small,
            [](const GroupCtx& c) -> std::optional<std::string> {
                auto perm = seeded_shuffle(c.G.order(), 1234u + static_cast<unsigned>(c.G.order()));
                GroupTable H = relabel_group(c.G, perm);
                if (!are_isomorphic_graphs(c.P, power_graph(H))) return "undirected mismatch";
                if (!are_isomorphic_digraphs(c.D, directed_power_graph(H))) return "directed mismatch";
                return std::nullopt;
            }));
    }

    {
        // A4 inside S4: the induced subgraph equals the power graph of A4
        bool ok = true;
        std::string detail;
        GroupTable s4 = build_named_group("S4");
        GroupTable a4 = alternating4();
        SymmetricMul sym(4);
        std::vector<int> even;
        for (int r = 0; r < s4.order(); ++r) {
            const auto& p = sym.perm(r);
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (p[i] > p[j]) ++inv;
            if (inv % 2 == 0) even.push_back(r);
        }
        auto sub = induced_subgraph(power_graph(s4), even);
        if (!(sub.graph == power_graph(a4))) {
            ok = false;
            detail = "induced A4 subgraph differs from the power graph of A4";
        }
        out.push_back({"the A4 subgroup of S4 induces the power graph of A4", ok, detail});
    }

    return out;
}

std::vector<CheckResult> verify_relation_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups("diamond refines the closed-twin relation", ctxs,
                              [](const GroupCtx& c) -> std::optional<std::string> {
                                  Partition dp = diamond_partition_from_group(c.G);
                                  Partition np = n_partition(c.P);
                                  for (const auto& cls : dp.classes)
                                      for (int v : cls)
                                          if (np.class_of[v] != np.class_of[cls[0]])
                                              return "diamond class splits across N-classes";
                                  return std::nullopt;
                              }));

    out.push_back(over_groups(
        "inside an N-class, order classes and diamond classes coincide", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition dp = diamond_partition_from_group(c.G);
            Partition np = n_partition(c.P);
            for (const auto& cls : np.classes)
                for (int x : cls)
                    for (int y : cls) {
                        bool same_o = c.G.element_order(x) == c.G.element_order(y);
                        bool same_d = dp.class_of[x] == dp.class_of[y];
                        if (same_o != same_d) return "order/diamond mismatch inside an N-class";
                    }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "equal orders: joined, diamond-related and N-related are equivalent", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition dp = diamond_partition_from_group(c.G);
            Partition np = n_partition(c.P);
            for (int x = 0; x < c.G.order(); ++x)
                for (int y = x + 1; y < c.G.order(); ++y) {
                    if (c.G.element_order(x) != c.G.element_order(y)) continue;
                    bool joined = c.P.adjacent(x, y);
                    bool dia = dp.class_of[x] == dp.class_of[y];
                    bool ncl = np.class_of[x] == np.class_of[y];
                    if (joined != dia || dia != ncl)
                        return "triple equivalence fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")";
                }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "N-class sits inside the closed neighborhood, which sits inside the centralizer", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition np = n_partition(c.P);
            for (int x = 0; x < c.G.order(); ++x) {
                Bitset nb = c.P.closed_row(x);
                for (int y : np.classes[np.class_of[x]])
                    if (!nb.test(y)) return "N-class escapes N[x]";
                auto cent = centralizer(c.G, x);
                Bitset cb(c.G.order());
                for (int h : cent) cb.set(h);
                for (int y : nb.members())
                    if (!cb.test(y)) return "N[x] escapes the centralizer";
            }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "open twins are exactly involution pairs whose open neighborhood is the identity", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition op = open_twin_partition(c.P);
            for (int x = 0; x < c.G.order(); ++x)
                for (int y = x + 1; y < c.G.order(); ++y) {
                    bool twins = op.class_of[x] == op.class_of[y];
                    bool chr = c.G.element_order(x) == 2 && c.G.element_order(y) == 2 &&
                               c.P.degree(x) == 1 && c.P.degree(y) == 1 &&
                               c.P.adjacent(x, c.G.identity()) && c.P.adjacent(y, c.G.identity());
                    if (twins != chr)
                        return "open-twin characterization fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")";
                }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "for prime power orders, neighborhood containment matches the power relation", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            for (int x = 0; x < c.G.order(); ++x) {
                if (!prime_power(c.G.element_order(x)) && c.G.element_order(x) != 1) continue;
                for (int y = 0; y < c.G.order(); ++y) {
                    if (x == y) continue;
                    if (!prime_power(c.G.element_order(y)) && c.G.element_order(y) != 1) continue;
                    if (c.G.element_order(x) > c.G.element_order(y)) continue;
                    Bitset nx = c.P.closed_row(x), ny = c.P.closed_row(y);
                    Bitset meet = nx;
                    meet &= ny;
                    bool contains = meet == ny;
                    bool ispower = c.G.generates(y, x);
                    if (contains != ispower)
                        return "containment/power mismatch at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")";
                }
            }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "swapping two members of an N-class is a graph automorphism", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition np = n_partition(c.P);
            for (const auto& cls : np.classes) {
                if (cls.size() < 2) continue;
                std::vector<int> perm(c.P.order());
                std::iota(perm.begin(), perm.end(), 0);
                std::swap(perm[cls[0]], perm[cls[1]]);
                if (!(permute_graph(c.P, perm) == c.P)) return "swap is not an automorphism";
                break;
            }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "star census matches the group-side classification", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            auto s = star_vertices(c.P);
            num n = c.G.order();
            num expect;
            if (is_cyclic_group(c.G))
                expect = prime_power(n) || n == 1 ? n : 1 + euler_phi(n);
            else if (n % 2 == 0 && (n & (n - 1)) == 0 && involution_count(c.G) == 1)
                expect = 2; // 2-group with a unique involution
            else
                expect = 1;
            if (static_cast<num>(s.size()) != expect)
                return "expected " + std::to_string(expect) + " star vertices, found " +
                       std::to_string(s.size());
            return std::nullopt;
        }));

    return out;
}

std::vector<CheckResult> verify_reconstruction_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups(
        "orient rebuilds the directed power graph up to digraph isomorphism", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Digraph d = orient(c.P);
            if (!(underlying_undirected(d) == c.P)) return "orientation changes the underlying graph";
            if (!are_isomorphic_digraphs(d, c.D)) return "oriented digraph not isomorphic";
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "extracted diamond classes match the group-side diamond partition by sizes", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            if (star_vertices(c.P).size() != 1) return std::nullopt; // catalog shortcut cases
            auto ex = diamond_from_power_graph(c.P);
            Partition dp = diamond_partition_from_group(c.G);
            std::multiset<std::size_t> a, b;
            for (const auto& cls : ex.partition.classes) a.insert(cls.size());
            for (const auto& cls : dp.classes) b.insert(cls.size());
            if (a != b)
                return "sizes " + show_class_sizes(ex.partition) + "vs " + show_class_sizes(dp);
            if (ex.identity != c.G.identity()) return "identity vertex misidentified";
            return std::nullopt;
        }));

    {
        std::vector<GroupCtx> small;
        for (auto& c : ctxs)
            if (c.G.order() <= 32 && star_vertices(c.P).size() == 1) small.push_back(c);
        out.push_back(over_groups(
            "N-class types are invariant under graph relabelling", small,
            [](const GroupCtx& c) -> std::optional<std::string> {
                auto perm = seeded_shuffle(c.P.order(), 77u + static_cast<unsigned>(c.P.order()));
                Graph h = permute_graph(c.P, perm);
                auto ra = classify_all_n_classes(c.P);
                auto rb = classify_all_n_classes(h);
                auto summarize = [](const std::vector<NClassReport>& rs) {
                    std::multiset<std::string> s;
                    for (const auto& r : rs) {
                        std::ostringstream os;
                        os << r.members.size() << "/" << r.chat_size << "/"
                           << n_class_tag_name(r.type.tag) << "/" << r.type.params.p << ","
                           << r.type.params.r << "," << r.type.params.s << "/" << r.type.critical;
                        s.insert(os.str());
                    }
                    return s;
                };
                if (summarize(ra) != summarize(rb)) return "type multiset changed";
                return std::nullopt;
            }));
    }

    out.push_back(over_groups(
        "a single cross edge joins two N-classes completely", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition np = n_partition(c.P);
            Graph q = quotient(c.P, np);
            for (int c1 = 0; c1 < q.order(); ++c1)
                for (int c2 : q.neighbors(c1)) {
                    if (c2 <= c1) continue;
                    for (int v : np.classes[c1])
                        for (int w : np.classes[c2])
                            if (!c.P.adjacent(v, w))
                                return "cross pair missing between N-classes " + std::to_string(c1) +
                                       " and " + std::to_string(c2);
                }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "N-class sizes are monotone along proper subgroup containment", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition np = n_partition(c.P);
            Partition dp = diamond_partition_from_group(c.G);
            auto star = star_vertices(c.P);
            Bitset star_set(c.P.order());
            for (int s : star) star_set.set(s);
            for (int x = 0; x < c.G.order(); ++x) {
                if (star_set.test(x)) continue;
                for (int y = 0; y < c.G.order(); ++y) {
                    if (x == y || star_set.test(y)) continue;
                    if (np.class_of[x] == np.class_of[y]) continue; // distinct classes only
                    // <x> < <y> proper
                    if (!c.G.generates(y, x) || c.G.element_order(x) == c.G.element_order(y))
                        continue;
                    std::size_t sx = np.classes[np.class_of[x]].size();
                    std::size_t sy = np.classes[np.class_of[y]].size();
                    if (sx > sy)
                        return "size decreases from " + std::to_string(x) + " to " + std::to_string(y);
                    if (sx == sy) {
                        // both classes must be single diamond classes with
                        // o(y) = 2 o(x), o(x) odd and at least 3
                        bool x_first = np.classes[np.class_of[x]] == dp.classes[dp.class_of[x]];
                        bool y_first = np.classes[np.class_of[y]] == dp.classes[dp.class_of[y]];
                        num ox = c.G.element_order(x), oy = c.G.element_order(y);
                        if (!(x_first && y_first && oy == 2 * ox && ox % 2 == 1 && ox >= 3))
                            return "equality outside the stated case at (" + std::to_string(x) +
                                   "," + std::to_string(y) + ")";
                    }
                }
            }
            return std::nullopt;
        }));

    return out;
}

std::vector<CheckResult> verify_recognition_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups(
        "element orders recovered from the abstract directed power graph match the group", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            auto got = element_orders_from_digraph(c.D);
            for (int v = 0; v < c.G.order(); ++v)
                if (got[v] != c.G.element_order(v))
                    return "order mismatch at " + std::to_string(v) + " (got " +
                           std::to_string(got[v]) + ")";
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "abelian invariants round-trip through a rebuilt direct product", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            if (!is_abelian_group(c.G)) return std::nullopt;
            auto inv = abelian_invariants_from_power_graph(c.P);
            num total = 1;
            for (num f : inv) total *= f;
            if (total != c.G.order()) return "invariants do not multiply to |G|";
            if (!inv.empty()) {
                std::vector<GroupSpec> fs;
                for (num f : inv) fs.push_back(GroupSpec::Cyclic(f));
                GroupTable H = build_group(GroupSpec::DirectProduct(fs));
                auto inv2 = abelian_invariants_from_power_graph(power_graph(H));
                if (inv != inv2) return "round-trip changed the invariants";
                std::map<int, int> ca, cb;
                for (int v = 0; v < c.G.order(); ++v) ++ca[c.G.element_order(v)];
                for (int v = 0; v < H.order(); ++v) ++cb[H.element_order(v)];
                if (ca != cb) return "rebuilt group has a different order census";
            }
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "class poset has the identity class as unique minimum", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            auto poset = class_poset(c.D);
            if (poset.identity_class < 0) return "no identity class found";
            if (poset.classes.classes[poset.identity_class] !=
                std::vector<int>{c.G.identity()})
                return "identity class is not the identity vertex";
            for (int k = 0; k < poset.classes.size(); ++k)
                if (!poset.le(poset.identity_class, k)) return "identity class not below all";
            return std::nullopt;
        }));

    return out;
}

namespace {

// Independent route for maximal directed cycle sets: enumerate all vertex
// subsets, keep those carrying a directed hamiltonian cycle, take the
// inclusion-maximal ones. Strong connectivity gates the expensive search.
std::vector<std::vector<int>> maximal_cycle_sets_exhaustive(const Digraph& d) {
    int n = d.order();
    std::vector<std::vector<int>> feasible;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> xs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) xs.push_back(v);
        if (xs.size() < 3) continue;
        // strong connectivity within xs
        auto reach = [&](bool forward) {
            std::vector<char> seen(n, 0);
            std::vector<int> stack{xs[0]};
            seen[xs[0]] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : xs) {
                    if (seen[w]) continue;
                    if (forward ? d.arc(v, w) : d.arc(w, v)) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            for (int w : xs)
                if (!seen[w]) return false;
            return true;
        };
        if (!reach(true) || !reach(false)) continue;
        // hamiltonian directed cycle on xs
        std::vector<char> used(n, 0);
        used[xs[0]] = 1;
        std::size_t target = xs.size();
        auto dfs = [&](auto&& self, int v, std::size_t len) -> bool {
            if (len == target) return d.arc(v, xs[0]);
            for (int w : xs) {
                if (used[w] || !d.arc(v, w)) continue;
                used[w] = 1;
                if (self(self, w, len + 1)) {
                    used[w] = 0;
                    return true;
                }
                used[w] = 0;
            }
            return false;
        };
        if (dfs(dfs, xs[0], 1)) feasible.push_back(xs);
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& a : feasible) {
        bool strict_super = false;
        for (const auto& b : feasible) {
            if (a.size() >= b.size() || &a == &b) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                strict_super = true;
                break;
            }
        }
        if (!strict_super) maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

// The explicit hamiltonian cycle of P(C2 x C10): the three order-10 classes
// are chained through the order-5 class, each involution rides inside a
// clique adjacent to it, and the identity closes the cycle.
std::vector<int> c2xc10_hamiltonian_cycle(const GroupTable& G) {
    Partition dp = diamond_partition_from_group(G);
    int id = G.identity();
    std::vector<std::vector<int>> order10;
    std::vector<int> order5, involutions;
    for (const auto& cls : dp.classes) {
        int o = G.element_order(cls[0]);
        if (o == 10) order10.push_back(cls);
        else if (o == 5) order5 = cls;
        else if (o == 2) involutions.insert(involutions.end(), cls.begin(), cls.end());
    }
    if (order10.size() != 3 || order5.size() != 4 || involutions.size() != 3)
        fail(errc::inconsistent_counts, "unexpected class structure for C2xC10");

    // match each order-10 class with the involution inside its cyclic group
    auto involution_of = [&](const std::vector<int>& cls) {
        for (int t : involutions)
            if (G.generates(cls[0], t)) return t;
        fail(errc::inconsistent_counts, "order-10 class without an involution below it");
    };

    std::vector<int> cycle;
    cycle.push_back(id);
    // id, t1, X1, f1, x2a, t2, X2-rest, f2, x3a, t3, X3-rest, f3, f4, (back to id)
    int t1 = involution_of(order10[0]);
    cycle.push_back(t1);
    for (int v : order10[0]) cycle.push_back(v);
    cycle.push_back(order5[0]);
    cycle.push_back(order10[1][0]);
    cycle.push_back(involution_of(order10[1]));
    for (std::size_t i = 1; i < order10[1].size(); ++i) cycle.push_back(order10[1][i]);
    cycle.push_back(order5[1]);
    cycle.push_back(order10[2][0]);
    cycle.push_back(involution_of(order10[2]));
    for (std::size_t i = 1; i < order10[2].size(); ++i) cycle.push_back(order10[2][i]);
    cycle.push_back(order5[2]);
    cycle.push_back(order5[3]);
    return cycle;
}

} // namespace

std::vector<CheckResult> verify_cycle_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    {
        std::vector<GroupCtx> small;
        for (auto& c : ctxs)
            if (c.G.order() >= 3 && c.G.order() <= 20) small.push_back(c);
        out.push_back(over_groups(
            "longest cycle respects both lower bounds", small,
            [](const GroupCtx& c) -> std::optional<std::string> {
                auto bounds = cycle_bounds(c.G);
                int longest = longest_cycle_oracle(c.P);
                if (bounds.max_order > bounds.weight_bound)
                    return "max-order bound exceeds the weight bound";
                if (longest < bounds.weight_bound)
                    return "longest cycle " + std::to_string(longest) + " below weight bound " +
                           std::to_string(bounds.weight_bound);
                return std::nullopt;
            }));
    }

    {
        bool ok = true;
        std::string detail = "n in [3, 30]";
        for (num n = 3; n <= 30 && ok; ++n) {
            GroupTable G = build_group(GroupSpec::Cyclic(n));
            auto cyc = hamiltonian_cycle_power_cyclic(n);
            if (static_cast<num>(cyc.size()) != n) {
                ok = false;
                detail = "wrong length at n=" + std::to_string(n);
                break;
            }
            std::vector<char> seen(G.order(), 0);
            for (int v : cyc) seen[v] = 1;
            if (std::count(seen.begin(), seen.end(), 1) != n) {
                ok = false;
                detail = "not a permutation of the vertices at n=" + std::to_string(n);
                break;
            }
            for (std::size_t i = 0; i < cyc.size(); ++i)
                if (!edge_predicate(G, cyc[i], cyc[(i + 1) % cyc.size()])) {
                    ok = false;
                    detail = "invalid edge at n=" + std::to_string(n);
                    break;
                }
        }
        out.push_back({"hamiltonian cycles of cyclic power graphs validate edge by edge", ok, detail});
    }

    {
        bool ok = true;
        std::string detail = "(p,k) over small prime powers";
        std::vector<std::pair<num, int>> cases{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 5}, {3, 3}};
        for (auto [p, k] : cases) {
            num n = 1;
            for (int i = 0; i < k; ++i) n *= p;
            GroupTable G = build_group(GroupSpec::Cyclic(n));
            Digraph D = directed_power_graph(G);
            auto path = hamiltonian_directed_path_prime_power(p, k);
            if (static_cast<num>(path.size()) != n) {
                ok = false;
                detail = "wrong length at p^k=" + std::to_string(n);
                break;
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (!D.arc(path[i], path[i + 1])) {
                    ok = false;
                    detail = "missing arc at p^k=" + std::to_string(n);
                    break;
                }
            if (!ok) break;
        }
        out.push_back({"directed hamiltonian paths of prime power cyclic groups validate arc by arc",
                       ok, detail});
    }

    {
        std::vector<GroupCtx> tiny;
        for (auto& c : ctxs)
            if (c.G.order() <= 12) tiny.push_back(c);
        out.push_back(over_groups(
            "maximal directed cycle sets are the diamond classes of size at least three", tiny,
            [](const GroupCtx& c) -> std::optional<std::string> {
                auto lib = maximal_directed_cycles(c.D);
                std::sort(lib.begin(), lib.end());
                auto exh = maximal_cycle_sets_exhaustive(c.D);
                if (lib != exh) return "library and exhaustive cycle sets differ";
                Partition dp = diamond_partition_from_group(c.G);
                std::vector<std::vector<int>> expect;
                for (const auto& cls : dp.classes)
                    if (cls.size() >= 3) expect.push_back(cls);
                std::sort(expect.begin(), expect.end());
                if (lib != expect) return "cycle sets differ from large diamond classes";
                return std::nullopt;
            }));
    }

    out.push_back(over_groups(
        "cycles extend to unions of whole N-classes", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            // use the triangle 1, g, g^2 for some element of order >= 3
            int g = -1;
            for (int v = 0; v < c.G.order(); ++v)
                if (c.G.element_order(v) >= 3) {
                    g = v;
                    break;
                }
            if (g < 0) return std::nullopt;
            std::vector<int> tri{c.G.identity(), g, c.G.mul(g, g)};
            auto closed = close_cycle_over_n_classes(c.P, tri);
            Partition np = n_partition(c.P);
            std::vector<char> in(c.P.order(), 0);
            for (int v : closed) in[v] = 1;
            for (int v : closed)
                for (int w : np.classes[np.class_of[v]])
                    if (!in[w]) return "closure is not N-saturated";
            for (std::size_t i = 0; i < closed.size(); ++i)
                if (!c.P.adjacent(closed[i], closed[(i + 1) % closed.size()]))
                    return "closure is not a cycle";
            for (int v : tri)
                if (!in[v]) return "closure lost an input vertex";
            return std::nullopt;
        }));

    {
        bool ok = true;
        std::string detail;
        GroupTable G = build_named_group("C2xC10");
        Graph P = power_graph(G);
        auto cyc = c2xc10_hamiltonian_cycle(G);
        if (static_cast<int>(cyc.size()) != G.order()) {
            ok = false;
            detail = "cycle does not cover the group";
        } else {
            std::vector<char> seen(G.order(), 0);
            for (int v : cyc) seen[v] = 1;
            if (std::count(seen.begin(), seen.end(), 1) != G.order()) {
                ok = false;
                detail = "cycle repeats a vertex";
            }
            for (std::size_t i = 0; ok && i < cyc.size(); ++i)
                if (!P.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) {
                    ok = false;
                    detail = "edge " + std::to_string(cyc[i]) + "-" +
                             std::to_string(cyc[(i + 1) % cyc.size()]) + " missing";
                }
        }
        out.push_back({"explicit hamiltonian cycle of P(C2xC10) validates", ok, detail});
    }

    {
        // equality case of the weight bound on C2xC4: the longest cycle equals
        // w+1 and no heavy class outside the best path neighbors an interior
        // heavy class
        bool ok = true;
        std::string detail;
        GroupTable G = build_named_group("C2xC4");
        Graph P = power_graph(G);
        auto bounds = cycle_bounds(G);
        int longest = longest_cycle_oracle(P);
        if (longest != bounds.weight_bound) {
            ok = false;
            detail = "longest cycle is not w+1";
        } else {
            auto proper = proper_power_graph(G);
            Partition np = n_partition(proper.graph);
            Graph q = quotient(proper.graph, np);
            std::vector<num> w(np.size());
            for (int c = 0; c < np.size(); ++c) w[c] = static_cast<num>(np.classes[c].size());
            auto best = max_weight_path(q, w);
            for (std::size_t i = 1; ok && i + 1 < best.path.size(); ++i) {
                int ci = best.path[i];
                if (w[ci] < 2) continue;
                for (int y : q.neighbors(ci)) {
                    if (std::find(best.path.begin(), best.path.end(), y) != best.path.end())
                        continue;
                    if (w[y] >= 2) {
                        ok = false;
                        detail = "heavy off-path neighbor found at equality";
                    }
                }
            }
        }
        out.push_back({"weight-bound equality case behaves as stated on C2xC4", ok, detail});
    }

    return out;
}

std::vector<CheckResult> verify_quotient_laws(const std::vector<std::string>& names) {
    auto ctxs = build_contexts(names);
    std::vector<CheckResult> out;

    out.push_back(over_groups(
        "component counts agree across the proper graph and its two quotients", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            if (c.G.order() < 2) return std::nullopt;
            auto cc = component_counts(c.G);
            if (cc.proper != cc.diamond || cc.proper != cc.closed_twin)
                return "counts " + std::to_string(cc.proper) + "/" + std::to_string(cc.diamond) +
                       "/" + std::to_string(cc.closed_twin);
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "the closed-twin projection of the power graph is complete, tame and locally strong", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            Partition np = n_partition(c.P);
            Graph q = quotient(c.P, np);
            if (!is_tame(c.P, np)) return "not tame";
            if (!is_locally_strong(c.P, np)) return "not locally strong";
            if (!is_complete_projection(c.P, np, q)) return "not complete";
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "the diamond quotient of the proper graph is tame and locally strong", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            if (c.G.order() < 2) return std::nullopt;
            auto proper = proper_power_graph(c.G);
            Partition dp = diamond_partition_from_group(c.G);
            std::vector<int> labels(proper.graph.order());
            for (int v = 0; v < proper.graph.order(); ++v) {
                int rep = dp.classes[dp.class_of[proper.new_to_old[v]]][0];
                labels[v] = proper.old_to_new[rep];
            }
            Partition restricted = make_partition(proper.graph.order(), labels);
            if (!is_tame(proper.graph, restricted)) return "not tame";
            if (!is_locally_strong(proper.graph, restricted)) return "not locally strong";
            return std::nullopt;
        }));

    out.push_back(over_groups(
        "twin-quotient tameness matches twin equals closed-twin off the identity", ctxs,
        [](const GroupCtx& c) -> std::optional<std::string> {
            if (c.G.order() < 2) return std::nullopt;
            auto proper = proper_power_graph(c.G);
            Partition t = twin_partition(proper.graph);
            Partition n = n_partition(proper.graph);
            bool tame = is_tame(proper.graph, t);
            bool same = t.classes == n.classes;
            if (tame != same) return "tameness disagrees with T=N";
            return std::nullopt;
        }));

    out.push_back(over_groups("open-twin tameness agrees with open-twin triviality", ctxs,
                              [](const GroupCtx& c) -> std::optional<std::string> {
                                  if (c.G.order() < 2) return std::nullopt;
                                  if (!o_tame_trivial_check(c.G)) return "sides disagree";
                                  return std::nullopt;
                              }));

    {
        std::vector<GroupCtx> small;
        for (auto& c : ctxs)
            if (c.G.order() <= 12) small.push_back(c);
        out.push_back(over_groups(
            "components never drop under quotients; equality exactly when tame", small,
            [](const GroupCtx& c) -> std::optional<std::string> {
                std::mt19937 rng(500u + static_cast<unsigned>(c.G.order()));
                for (int trial = 0; trial < 8; ++trial) {
                    std::uniform_int_distribution<int> d(0, std::max(1, c.P.order() / 2) - 1);
                    std::vector<int> labels(c.P.order());
                    for (auto& l : labels) l = d(rng);
                    Partition p = make_partition(c.P.order(), labels);
                    int base = connected_components(c.P).count;
                    int quo = connected_components(quotient(c.P, p)).count;
                    if (base > quo) return "component count dropped";
                    if ((base == quo) != is_tame(c.P, p)) return "equality disagrees with tameness";
                }
                return std::nullopt;
            }));

        out.push_back(over_groups(
            "quotient edges match the cross-edge definition on randomized partitions", small,
            [](const GroupCtx& c) -> std::optional<std::string> {
                std::mt19937 rng(900u + static_cast<unsigned>(c.G.order()));
                for (int trial = 0; trial < 8; ++trial) {
                    std::uniform_int_distribution<int> d(0, std::max(1, c.P.order() / 2) - 1);
                    std::vector<int> labels(c.P.order());
                    for (auto& l : labels) l = d(rng);
                    Partition p = make_partition(c.P.order(), labels);
                    Graph q = quotient(c.P, p);
                    for (int c1 = 0; c1 < q.order(); ++c1)
                        for (int c2 = c1 + 1; c2 < q.order(); ++c2) {
                            bool cross = false;
                            for (int v : p.classes[c1]) {
                                for (int w : p.classes[c2])
                                    if (c.P.adjacent(v, w)) {
                                        cross = true;
                                        break;
                                    }
                                if (cross) break;
                            }
                            if (cross != q.adjacent(c1, c2)) return "cross-edge semantics violated";
                        }
                }
                return std::nullopt;
            }));
    }

    return out;
}

std::vector<CheckResult> run_catalog_verification() {
    auto names = catalog_names(CatalogTier::standard);
    std::vector<CheckResult> out;
    auto absorb = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    absorb(verify_phi_identities());
    absorb(verify_group_laws(names));
    absorb(verify_power_graph_laws(names));
    absorb(verify_relation_laws(names));
    absorb(verify_reconstruction_laws(names));
    absorb(verify_recognition_laws(names));
    absorb(verify_cycle_laws(names));
    absorb(verify_quotient_laws(names));
    return out;
}

} // namespace pg
