#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pg {

// Command-line front end. Returns 0 on success, 1 on domain errors, 2 on
// usage errors. All regular output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pg
