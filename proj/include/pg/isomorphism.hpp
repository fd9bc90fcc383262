#pragma once

#include "pg/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pg {

struct IsoOptions {
    std::int64_t budget_ms = 30000;
};

// Complete backtracking search over degree/refinement-compatible candidates.
// Returns the lexicographically least vertex bijection a -> b witnessing
// isomorphism, or nullopt. Throws timeout when the budget is exceeded.
std::optional<std::vector<int>> are_isomorphic_graphs(const Graph& a, const Graph& b,
                                                      const IsoOptions& opts = {});

std::optional<std::vector<int>> are_isomorphic_digraphs(const Digraph& a, const Digraph& b,
                                                        const IsoOptions& opts = {});

} // namespace pg
