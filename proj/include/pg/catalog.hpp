#pragma once

#include "pg/group.hpp"

#include <string>
#include <vector>

namespace pg {

// Name grammar: C12, D7, Q16, S4, A4, C2xC10, UT3_3, GL2_5, file:<path>.
// Products of atoms are written with 'x'.
GroupTable build_named_group(const std::string& name, int order_cap = kDefaultOrderCap);

enum class CatalogTier {
    standard, // everything that fits the dense adjacency cap comfortably
    extended, // + GL2_5
    huge,     // + S8 (lazy edges only)
};

// Names of the built-in catalog, in a fixed order.
std::vector<std::string> catalog_names(CatalogTier tier = CatalogTier::standard);

// A4 materialized as the even-permutation subgroup table of S4.
GroupTable alternating4();

} // namespace pg
