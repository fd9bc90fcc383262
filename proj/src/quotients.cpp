#include "pg/quotients.hpp"

#include "pg/errors.hpp"
#include "pg/power_graph.hpp"
#include "pg/relations.hpp"

namespace pg {

QuotientResult ctr(const Graph& g) {
    Partition p = n_partition(g);
    Graph q = quotient(g, p);
    return {std::move(q), std::move(p)};
}

QuotientResult otr(const Graph& g) {
    Partition p = open_twin_partition(g);
    Graph q = quotient(g, p);
    return {std::move(q), std::move(p)};
}

QuotientResult tr(const Graph& g) {
    Partition p = twin_partition(g);
    Graph q = quotient(g, p);
    return {std::move(q), std::move(p)};
}

bool is_tame(const Graph& g, const Partition& p) {
    if (!covers(p, g.order()))
        fail(errc::partition_mismatch, "is_tame: partition does not cover the vertex set");
    Components comp = connected_components(g);
    for (const auto& cls : p.classes)
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (comp.label[cls[i]] != comp.label[cls[0]]) return false;
    return true;
}

bool is_locally_strong(const Graph& g, const Partition& p) {
    if (!covers(p, g.order()))
        fail(errc::partition_mismatch, "is_locally_strong: partition does not cover the vertex set");
    Graph q = quotient(g, p);
    // same-class pairs are joined through the implicit loops, so only real
    // quotient edges need witnesses: every member of one class must see some
    // member of the other
    for (int c1 = 0; c1 < q.order(); ++c1)
        for (int c2 : q.neighbors(c1)) {
            for (int v : p.classes[c1]) {
                bool hit = false;
                for (int w : p.classes[c2])
                    if (g.adjacent(v, w)) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
        }
    return true;
}

bool is_complete_projection(const Graph& g, const Partition& p, const Graph& q) {
    if (!covers(p, g.order()))
        fail(errc::partition_mismatch, "is_complete_projection: partition does not cover the vertex set");
    for (int c1 = 0; c1 < q.order(); ++c1)
        for (int c2 : q.neighbors(c1)) {
            if (c2 <= c1) continue;
            bool witness = false;
            for (int v : p.classes[c1]) {
                for (int w : p.classes[c2])
                    if (g.adjacent(v, w)) {
                        witness = true;
                        break;
                    }
                if (witness) break;
            }
            if (!witness) return false;
        }
    return true;
}

ComponentCounts component_counts(const GroupTable& G) {
    if (G.order() < 2) fail(errc::trivial_group, "component_counts: |G| must be >= 2");
    auto proper = proper_power_graph(G);

    // diamond classes restricted to the non-identity vertices; the identity
    // is a singleton class, so every other class survives intact
    Partition full_diamond = diamond_partition_from_group(G);
    std::vector<int> labels(proper.graph.order());
    for (int v = 0; v < proper.graph.order(); ++v) {
        int old = proper.new_to_old[v];
        int rep = full_diamond.classes[full_diamond.class_of[old]][0];
        labels[v] = proper.old_to_new[rep];
    }
    Partition diamond = make_partition(proper.graph.order(), labels);
    Partition closed = n_partition(proper.graph);

    ComponentCounts out{};
    out.proper = connected_components(proper.graph).count;
    out.diamond = connected_components(quotient(proper.graph, diamond)).count;
    out.closed_twin = connected_components(quotient(proper.graph, closed)).count;
    return out;
}

bool o_tame_trivial_check(const GroupTable& G) {
    if (G.order() < 2) fail(errc::trivial_group, "o_tame_trivial_check: |G| must be >= 2");
    auto proper = proper_power_graph(G);
    Partition o = open_twin_partition(proper.graph);
    bool tame = is_tame(proper.graph, o);
    bool discrete = o.size() == proper.graph.order();
    return tame == discrete;
}

} // namespace pg
