#include "pg/cli.hpp"

#include "pg/catalog.hpp"
#include "pg/cycles.hpp"
#include "pg/errors.hpp"
#include "pg/io.hpp"
#include "pg/power_graph.hpp"
#include "pg/quotients.hpp"
#include "pg/recognition.hpp"
#include "pg/reconstruction.hpp"
#include "pg/relations.hpp"
#include "pg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>

namespace pg {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string group;
    std::string in_path;
    std::string out_path;
    std::string format = "dot";
    std::int64_t budget_ms = 30000;
    bool extended = false;
    bool huge = false;
    bool json_errors = false;
};

void write_output(const CommonOpts& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot write " + o.out_path);
    f << text;
}

GroupTable group_from_opts(const CommonOpts& o) {
    if (o.group.empty()) fail(errc::usage_error, "--group is required for this command");
    return build_named_group(o.group);
}

Graph graph_from_opts(const CommonOpts& o) {
    if (!o.in_path.empty()) {
        DotGraph dg = parse_dot_file(o.in_path);
        if (dg.directed) fail(errc::invalid_params, "expected an undirected graph");
        return dg.graph;
    }
    return power_graph(group_from_opts(o));
}

ordered_json partition_json(const Partition& p) {
    ordered_json classes = ordered_json::array();
    for (const auto& cls : p.classes) classes.push_back(cls);
    return ordered_json{{"count", p.size()}, {"classes", classes}};
}

ordered_json order_census_json(const std::vector<num>& orders) {
    std::map<num, num> census;
    for (num o : orders) ++census[o];
    ordered_json j = ordered_json::object();
    for (auto [o, k] : census) j[std::to_string(o)] = k;
    return j;
}

ordered_json n_class_report_json(const std::vector<NClassReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["members"] = r.members;
        j["size"] = r.members.size();
        j["hat_size"] = r.chat_size;
        j["type"] = n_class_tag_name(r.type.tag);
        j["critical"] = r.type.critical;
        if (r.type.tag == NClassType::Tag::second_type || r.type.critical) {
            j["p"] = r.type.params.p;
            j["r"] = r.type.params.r;
            if (r.type.tag == NClassType::Tag::second_type) j["s"] = r.type.params.s;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_group(const CommonOpts& o, std::ostream& out) {
    GroupTable G = o.in_path.empty() ? group_from_opts(o) : load_cayley_csv(o.in_path);
    if (o.format == "csv") {
        write_output(o, out, to_cayley_csv(G));
        return 0;
    }
    std::vector<num> orders(G.order());
    for (int v = 0; v < G.order(); ++v) orders[v] = G.element_order(v);
    bool abelian = true;
    for (int a = 0; a < G.order() && abelian; ++a)
        for (int b = a + 1; b < G.order(); ++b)
            if (G.mul(a, b) != G.mul(b, a)) {
                abelian = false;
                break;
            }
    bool cyclic = false;
    for (int v = 0; v < G.order(); ++v)
        if (G.element_order(v) == G.order()) cyclic = true;
    ordered_json j;
    j["name"] = G.name();
    j["order"] = G.order();
    j["identity"] = G.identity();
    j["abelian"] = abelian;
    j["cyclic"] = cyclic;
    j["order_census"] = order_census_json(orders);
    write_output(o, out, j.dump(2) + "\n");
    return 0;
}

int cmd_power(const CommonOpts& o, std::ostream& out, bool directed, bool proper) {
    GroupTable G = group_from_opts(o);
    if (directed) {
        Digraph d = directed_power_graph(G);
        if (o.format == "json") {
            ordered_json j;
            j["n"] = d.order();
            ordered_json arcs = ordered_json::array();
            for (int u = 0; u < d.order(); ++u)
                for (int v : d.out_row(u).members()) arcs.push_back(ordered_json::array({u, v}));
            j["arcs"] = std::move(arcs);
            write_output(o, out, j.dump(2) + "\n");
        } else {
            write_output(o, out, to_dot(d, {}, "dpower"));
        }
        return 0;
    }
    Graph g;
    ordered_json map_info;
    if (proper) {
        auto pp = proper_power_graph(G);
        g = pp.graph;
        map_info["new_to_old"] = pp.new_to_old;
    } else {
        g = power_graph(G);
    }
    if (o.format == "json") {
        ordered_json j;
        j["n"] = g.order();
        ordered_json edges = ordered_json::array();
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges.push_back(ordered_json::array({u, v}));
        j["edges"] = std::move(edges);
        if (proper) j["new_to_old"] = map_info["new_to_old"];
        write_output(o, out, j.dump(2) + "\n");
    } else {
        write_output(o, out, to_dot(g, {}, proper ? "proper" : "power"));
    }
    return 0;
}

int cmd_classes(const CommonOpts& o, std::ostream& out) {
    ordered_json j;
    if (!o.in_path.empty()) {
        Graph g = graph_from_opts(o);
        j["n"] = g.order();
        j["N"] = partition_json(n_partition(g));
        j["O"] = partition_json(open_twin_partition(g));
        j["T"] = partition_json(twin_partition(g));
    } else {
        GroupTable G = group_from_opts(o);
        Graph g = power_graph(G);
        j["group"] = G.name();
        j["n"] = g.order();
        j["diamond"] = partition_json(diamond_partition_from_group(G));
        j["order"] = partition_json(o_partition(G));
        j["N"] = partition_json(n_partition(g));
        j["O"] = partition_json(open_twin_partition(g));
        j["T"] = partition_json(twin_partition(g));
    }
    write_output(o, out, j.dump(2) + "\n");
    return 0;
}

int cmd_reconstruct(const CommonOpts& o, std::ostream& out, bool check,
                    const std::string& report_path) {
    IsoOptions iso{o.budget_ms};
    Graph g = graph_from_opts(o);
    Digraph d = orient(g, iso);

    if (!report_path.empty()) {
        ordered_json rep;
        StarCase sc = classify_star_case(g);
        rep["n"] = g.order();
        rep["star_case"] = star_case_name(sc.kind);
        rep["star_set"] = sc.star_set;
        if (sc.kind == StarCaseKind::singleton_star)
            rep["n_classes"] = n_class_report_json(classify_all_n_classes(g));
        std::ofstream f(report_path, std::ios::binary);
        if (!f) fail(errc::io_error, "cannot write " + report_path);
        f << rep.dump(2) << "\n";
    }

    if (check) {
        if (o.group.empty())
            fail(errc::usage_error, "--check needs --group to compare against the true digraph");
        GroupTable G = build_named_group(o.group);
        bool iso_ok = are_isomorphic_digraphs(d, directed_power_graph(G), iso).has_value();
        ordered_json j;
        j["group"] = G.name();
        j["isomorphic"] = iso_ok;
        write_output(o, out, j.dump(2) + "\n");
        return iso_ok ? 0 : 1;
    }

    if (o.format == "json") {
        ordered_json j;
        j["n"] = d.order();
        ordered_json arcs = ordered_json::array();
        for (int u = 0; u < d.order(); ++u)
            for (int v : d.out_row(u).members()) arcs.push_back(ordered_json::array({u, v}));
        j["arcs"] = std::move(arcs);
        write_output(o, out, j.dump(2) + "\n");
    } else {
        write_output(o, out, to_dot(d, {}, "reconstructed"));
    }
    return 0;
}

int cmd_recognize(const CommonOpts& o, std::ostream& out) {
    Graph g = graph_from_opts(o);
    StarCase sc = classify_star_case(g);
    ordered_json j;
    j["n"] = g.order();
    j["star_case"] = star_case_name(sc.kind);
    j["cyclic"] = sc.kind == StarCaseKind::complete_cyclic_prime_power ||
                  sc.kind == StarCaseKind::cyclic_non_prime_power;
    j["invariants"] = abelian_invariants_from_power_graph(g);
    j["order_census"] = order_census_json(element_orders_from_digraph(orient(g, {o.budget_ms})));
    write_output(o, out, j.dump(2) + "\n");
    return 0;
}

int cmd_cycles(const CommonOpts& o, std::ostream& out) {
    GroupTable G = group_from_opts(o);
    ordered_json j;
    j["group"] = G.name();
    auto bounds = cycle_bounds(G);
    j["M_o"] = bounds.max_order;
    j["w_G"] = bounds.weight_bound - 1;
    j["bound"] = bounds.weight_bound;
    if (G.order() <= 20) {
        j["oracle_longest"] = longest_cycle_oracle(power_graph(G));
    }
    bool cyclic = false;
    for (int v = 0; v < G.order(); ++v)
        if (G.element_order(v) == G.order()) cyclic = true;
    if (cyclic && G.order() >= 3) j["hamiltonian_witness"] = hamiltonian_cycle_power_cyclic(G.order());
    write_output(o, out, j.dump(2) + "\n");
    return 0;
}

int cmd_quotient(const CommonOpts& o, std::ostream& out, const std::string& relation,
                 bool proper) {
    GroupTable G = group_from_opts(o);
    Graph base;
    Partition p;
    if (proper) {
        auto pp = proper_power_graph(G);
        base = pp.graph;
        if (relation == "diamond") {
            Partition dp = diamond_partition_from_group(G);
            std::vector<int> labels(base.order());
            for (int v = 0; v < base.order(); ++v) {
                int rep = dp.classes[dp.class_of[pp.new_to_old[v]]][0];
                labels[v] = pp.old_to_new[rep];
            }
            p = make_partition(base.order(), labels);
        }
    } else {
        base = power_graph(G);
        if (relation == "diamond") p = diamond_partition_from_group(G);
    }
    if (relation == "N") p = n_partition(base);
    else if (relation == "O") p = open_twin_partition(base);
    else if (relation == "T") p = twin_partition(base);
    else if (relation != "diamond")
        fail(errc::usage_error, "--relation must be one of N, O, T, diamond");

    Graph q = quotient(base, p);
    if (o.format == "json") {
        ordered_json j;
        j["group"] = G.name();
        j["relation"] = relation;
        j["proper"] = proper;
        j["classes"] = partition_json(p);
        j["tame"] = is_tame(base, p);
        j["pseudo_covering"] = is_locally_strong(base, p); // projections are onto
        j["components_base"] = connected_components(base).count;
        j["components_quotient"] = connected_components(q).count;
        write_output(o, out, j.dump(2) + "\n");
    } else {
        write_output(o, out, to_dot(q, {}, "quotient"));
    }
    return 0;
}

int cmd_verify(std::ostream& out) {
    auto results = run_catalog_verification();
    int bad = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
        if (!r.pass) ++bad;
    }
    out << (bad ? "FAILED " + std::to_string(bad) + " checks\n" : "all checks passed\n");
    return bad ? 1 : 0;
}

int cmd_scan_critical(const CommonOpts& o, std::ostream& out) {
    CatalogTier tier = o.huge ? CatalogTier::huge
                              : (o.extended ? CatalogTier::extended : CatalogTier::standard);
    std::vector<std::string> names =
        o.group.empty() ? catalog_names(tier) : std::vector<std::string>{o.group};
    ordered_json arr = ordered_json::array();
    for (const auto& name : names) {
        GroupTable G = build_named_group(name);
        ordered_json j;
        j["group"] = name;
        j["order"] = G.order();
        try {
            auto classes = scan_critical_classes(G);
            ordered_json cs = ordered_json::array();
            for (const auto& c : classes) {
                ordered_json cj;
                cj["size"] = c.members.size();
                cj["hat_size"] = c.chat_size;
                cj["p"] = c.type.params.p;
                cj["r"] = c.type.params.r;
                cj["type"] = n_class_tag_name(c.type.tag);
                cs.push_back(std::move(cj));
            }
            j["critical_classes"] = std::move(cs);
        } catch (const error& e) {
            if (e.code() != errc::not_singleton_star) throw;
            j["skipped"] = "star census shortcut (more than one star vertex)";
        }
        arr.push_back(std::move(j));
    }
    write_output(o, out, arr.dump(2) + "\n");
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"power graphs of finite groups: construction, reconstruction, recognition"};
    app.require_subcommand(1);

    CommonOpts o;
    bool check = false;
    bool proper_flag = false;
    std::string relation = "N";
    std::string report_path;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--group", o.group, "group name (C12, D7, Q16, S4, A4, C2xC10, UT3_3, GL2_5, file:<path>)");
        cmd->add_option("--in", o.in_path, "input file (dot or cayley csv)");
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
        if (with_format)
            cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"dot", "json", "csv"}));
        cmd->add_option("--budget-ms", o.budget_ms, "time budget for searches");
        cmd->add_flag("--extended", o.extended, "include the extended catalog tier");
        cmd->add_flag("--huge", o.huge, "include the huge catalog tier (lazy edges)");
        cmd->add_flag("--json-errors", o.json_errors, "report domain errors as json");
    };

    auto* c_group = app.add_subcommand("group", "build and inspect a group");
    add_common(c_group);
    auto* c_power = app.add_subcommand("power", "emit the power graph");
    add_common(c_power);
    auto* c_dpower = app.add_subcommand("dpower", "emit the directed power graph");
    add_common(c_dpower);
    auto* c_proper = app.add_subcommand("proper", "emit the proper power graph");
    add_common(c_proper);
    auto* c_classes = app.add_subcommand("classes", "equivalence-class report");
    add_common(c_classes);
    auto* c_reconstruct = app.add_subcommand("reconstruct", "orient a power graph into its directed power graph");
    add_common(c_reconstruct);
    c_reconstruct->add_flag("--check", check, "compare against the group's true directed power graph");
    c_reconstruct->add_option("--report", report_path, "write the N-class report to this file");
    auto* c_recognize = app.add_subcommand("recognize", "recover structure from an abstract power graph");
    add_common(c_recognize);
    auto* c_cycles = app.add_subcommand("cycles", "cycle bounds and witnesses");
    add_common(c_cycles);
    auto* c_quotient = app.add_subcommand("quotient", "twin and diamond reductions");
    add_common(c_quotient);
    c_quotient->add_option("--relation", relation, "N, O, T or diamond");
    c_quotient->add_flag("--proper", proper_flag, "work on the proper power graph");
    auto* c_verify = app.add_subcommand("verify", "run the invariant suite over the built-in catalog");
    add_common(c_verify, false);
    auto* c_scan = app.add_subcommand("scan-critical", "list critical classes across the catalog");
    add_common(c_scan);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_group->parsed()) return cmd_group(o, out);
        if (c_power->parsed()) return cmd_power(o, out, false, false);
        if (c_dpower->parsed()) return cmd_power(o, out, true, false);
        if (c_proper->parsed()) return cmd_power(o, out, false, true);
        if (c_classes->parsed()) return cmd_classes(o, out);
        if (c_reconstruct->parsed()) return cmd_reconstruct(o, out, check, report_path);
        if (c_recognize->parsed()) return cmd_recognize(o, out);
        if (c_cycles->parsed()) return cmd_cycles(o, out);
        if (c_quotient->parsed()) return cmd_quotient(o, out, relation, proper_flag);
        if (c_verify->parsed()) return cmd_verify(out);
        if (c_scan->parsed()) return cmd_scan_critical(o, out);
        err << "usage error: no subcommand given\n";
        return 2;
    } catch (const error& e) {
        if (e.code() == errc::usage_error) {
            err << "usage error: " << e.what() << "\n";
            return 2;
        }
        if (o.json_errors) {
            ordered_json j;
            j["error"] = errc_name(e.code());
            j["message"] = e.what();
            err << j.dump() << "\n";
        } else {
            err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pg
