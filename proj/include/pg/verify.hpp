#pragma once

#include <string>
#include <vector>

namespace pg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample or a short note
};

// Number-theoretic identities (no group input needed).
std::vector<CheckResult> verify_phi_identities();

// Catalog-wide structural laws, grouped roughly by module. Each entry in the
// returned list aggregates one law over every named group.
std::vector<CheckResult> verify_group_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_power_graph_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_relation_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_reconstruction_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_recognition_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_cycle_laws(const std::vector<std::string>& names);
std::vector<CheckResult> verify_quotient_laws(const std::vector<std::string>& names);

// The full suite over the default catalog.
std::vector<CheckResult> run_catalog_verification();

} // namespace pg
