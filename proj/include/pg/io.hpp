#pragma once

#include "pg/graph.hpp"
#include "pg/group.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pg {

// DOT emission with stable vertex ordering; labels optional.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {},
                   const std::string& name = "g");
std::string to_dot(const Digraph& d, const std::vector<std::string>& labels = {},
                   const std::string& name = "g");

// Restricted DOT reader: node and edge statements with ids mapped in order of
// first appearance. Round-trips the emitter's output exactly.
struct DotGraph {
    bool directed = false;
    Graph graph;     // valid when !directed
    Digraph digraph; // valid when directed
    std::vector<std::string> ids; // vertex index -> original identifier
};

DotGraph parse_dot(std::istream& in);
DotGraph parse_dot_file(const std::string& path);

// Cayley CSV: first line n; then n lines of n comma-separated ids in [0, n).
GroupTable load_cayley_csv(const std::string& path, int order_cap = kDefaultOrderCap);
GroupTable parse_cayley_csv(std::istream& in, int order_cap, const std::string& name);
std::string to_cayley_csv(const GroupTable& G);

// element names like "a^2 b" for catalog constructions are not tracked; id
// labels are plain indices unless the caller supplies better ones
std::vector<std::string> index_labels(int n);

} // namespace pg
