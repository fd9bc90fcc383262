#include "pg/io.hpp"

#include "pg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace pg {

namespace {

std::string quote_label(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void emit_nodes(std::ostringstream& os, int n, const std::vector<std::string>& labels) {
    for (int v = 0; v < n; ++v) {
        os << "  " << v;
        if (!labels.empty()) os << " [label=" << quote_label(labels[v]) << "]";
        os << ";\n";
    }
}

} // namespace

std::string to_dot(const Graph& g, const std::vector<std::string>& labels,
                   const std::string& name) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.order())
        fail(errc::invalid_params, "to_dot: one label per vertex required");
    std::ostringstream os;
    os << "graph " << name << " {\n";
    emit_nodes(os, g.order(), labels);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Digraph& d, const std::vector<std::string>& labels,
                   const std::string& name) {
    if (!labels.empty() && static_cast<int>(labels.size()) != d.order())
        fail(errc::invalid_params, "to_dot: one label per vertex required");
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    emit_nodes(os, d.order(), labels);
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out_row(u).members()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

struct DotToken {
    enum Kind { id, sym, end } kind = end;
    std::string text;
};

class DotLexer {
public:
    explicit DotLexer(std::istream& in) : in_(in) {}

    DotToken next() {
        skip_ws();
        int c = in_.peek();
        if (c == EOF) return {DotToken::end, ""};
        if (c == '"') return quoted();
        if (c == '-') { // always an edge operator here
            in_.get();
            int d = in_.peek();
            if (d == '-' || d == '>') {
                in_.get();
                return {DotToken::sym, std::string("-") + static_cast<char>(d)};
            }
            fail(errc::parse_error, "stray '-' in dot input");
        }
        if (std::isalnum(c) || c == '_' || c == '.') return bare();
        in_.get();
        return {DotToken::sym, std::string(1, static_cast<char>(c))};
    }

private:
    void skip_ws() {
        while (true) {
            int c = in_.peek();
            if (c == EOF) return;
            if (std::isspace(c)) {
                in_.get();
                continue;
            }
            if (c == '/') { // // and /* */ comments
                in_.get();
                int d = in_.peek();
                if (d == '/') {
                    while (in_.peek() != EOF && in_.get() != '\n') {}
                } else if (d == '*') {
                    in_.get();
                    int prev = 0;
                    while (in_.peek() != EOF) {
                        int e = in_.get();
                        if (prev == '*' && e == '/') break;
                        prev = e;
                    }
                } else {
                    in_.unget();
                    return;
                }
                continue;
            }
            if (c == '#') {
                while (in_.peek() != EOF && in_.get() != '\n') {}
                continue;
            }
            return;
        }
    }

    DotToken quoted() {
        in_.get();
        std::string s;
        while (true) {
            int c = in_.get();
            if (c == EOF) fail(errc::parse_error, "unterminated quoted string in dot input");
            if (c == '\\') {
                int d = in_.get();
                if (d == EOF) fail(errc::parse_error, "unterminated escape in dot input");
                s += static_cast<char>(d);
                continue;
            }
            if (c == '"') break;
            s += static_cast<char>(c);
        }
        return {DotToken::id, s};
    }

    DotToken bare() {
        std::string s;
        while (true) {
            int c = in_.peek();
            if (c == EOF) break;
            if (std::isalnum(c) || c == '_' || c == '.') {
                s += static_cast<char>(in_.get());
                continue;
            }
            break;
        }
        return {DotToken::id, s};
    }

    std::istream& in_;
};

} // namespace

DotGraph parse_dot(std::istream& in) {
    DotLexer lex(in);
    DotToken t = lex.next();
    if (t.kind != DotToken::id || (t.text != "graph" && t.text != "digraph" && t.text != "strict"))
        fail(errc::parse_error, "dot input must start with 'graph' or 'digraph'");
    if (t.text == "strict") t = lex.next();
    bool directed = t.text == "digraph";

    t = lex.next(); // optional name
    if (t.kind == DotToken::id) t = lex.next();
    if (t.kind != DotToken::sym || t.text != "{")
        fail(errc::parse_error, "expected '{' in dot input");

    std::vector<std::string> ids;
    std::map<std::string, int> index;
    auto vertex = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, static_cast<int>(ids.size()));
        if (fresh) ids.push_back(name);
        return it->second;
    };

    struct Edge {
        int u, v;
    };
    std::vector<Edge> edges;

    // statements: ID [attrs]; | ID (--|->) ID [attrs];
    std::string pending;
    bool have_pending = false;
    while (true) {
        t = lex.next();
        if (t.kind == DotToken::end) fail(errc::parse_error, "unterminated dot graph");
        if (t.kind == DotToken::sym && t.text == "}") break;
        if (t.kind == DotToken::sym && t.text == ";") {
            if (have_pending) {
                vertex(pending);
                have_pending = false;
            }
            continue;
        }
        if (t.kind == DotToken::sym && t.text == "[") {
            // attribute list; skip to matching ]
            int depth = 1;
            while (depth) {
                t = lex.next();
                if (t.kind == DotToken::end) fail(errc::parse_error, "unterminated attribute list");
                if (t.kind == DotToken::sym && t.text == "[") ++depth;
                if (t.kind == DotToken::sym && t.text == "]") --depth;
            }
            if (have_pending) {
                vertex(pending);
                have_pending = false;
            }
            continue;
        }
        if (t.kind == DotToken::sym && (t.text == "--" || t.text == "->")) {
            if (!have_pending) fail(errc::parse_error, "edge operator without a left vertex");
            if ((t.text == "->") != directed)
                fail(errc::parse_error, "edge operator does not match the graph kind");
            DotToken rhs = lex.next();
            if (rhs.kind != DotToken::id) fail(errc::parse_error, "edge operator without a right vertex");
            edges.push_back({vertex(pending), vertex(rhs.text)});
            pending = rhs.text; // chains a -- b -- c
            have_pending = true;
            continue;
        }
        if (t.kind == DotToken::id) {
            if (have_pending) vertex(pending);
            pending = t.text;
            have_pending = true;
            continue;
        }
        fail(errc::parse_error, "unexpected token '" + t.text + "' in dot input");
    }
    if (have_pending) vertex(pending);

    DotGraph out;
    out.directed = directed;
    out.ids = ids;
    int n = static_cast<int>(ids.size());
    if (n == 0) fail(errc::parse_error, "dot input declares no vertices");
    if (directed) {
        out.digraph = Digraph(n);
        for (auto [u, v] : edges)
            if (u != v) out.digraph.add_arc(u, v);
    } else {
        out.graph = Graph(n);
        for (auto [u, v] : edges)
            if (u != v) out.graph.add_edge(u, v);
    }
    return out;
}

DotGraph parse_dot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    return parse_dot(in);
}

GroupTable parse_cayley_csv(std::istream& in, int order_cap, const std::string& name) {
    auto next_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t i = line.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) fail(errc::parse_error, "cayley csv: missing order line");
    long long n = 0;
    try {
        n = std::stoll(line);
    } catch (const std::exception&) {
        fail(errc::parse_error, "cayley csv: order line is not a number");
    }
    if (n < 1) fail(errc::parse_error, "cayley csv: order must be positive");
    if (n > order_cap) fail(errc::too_large, "cayley csv: order exceeds cap");

    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (long long r = 0; r < n; ++r) {
        if (!next_line(line)) fail(errc::parse_error, "cayley csv: missing row " + std::to_string(r));
        std::string cell;
        std::istringstream row(line);
        long long got = 0;
        while (std::getline(row, cell, ',')) {
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(cell, &pos);
            } catch (const std::exception&) {
                fail(errc::parse_error, "cayley csv: bad cell in row " + std::to_string(r));
            }
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
            if (pos != cell.size())
                fail(errc::parse_error, "cayley csv: trailing junk in row " + std::to_string(r));
            if (v < 0 || v >= n) fail(errc::not_a_group, "cayley csv: entry out of range");
            table.push_back(static_cast<int>(v));
            ++got;
        }
        if (got != n) fail(errc::parse_error, "cayley csv: row " + std::to_string(r) + " has wrong width");
    }
    GroupTable G = GroupTable::from_dense(static_cast<int>(n), std::move(table), name);
    std::string why = check_group_axioms(G);
    if (!why.empty()) fail(errc::not_a_group, "cayley csv: " + why);
    return G;
}

GroupTable load_cayley_csv(const std::string& path, int order_cap) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    return parse_cayley_csv(in, order_cap, "file:" + path);
}

std::string to_cayley_csv(const GroupTable& G) {
    std::ostringstream os;
    os << G.order() << "\n";
    for (int a = 0; a < G.order(); ++a) {
        for (int b = 0; b < G.order(); ++b) {
            if (b) os << ",";
            os << G.mul(a, b);
        }
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}

} // namespace pg
