#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgw {

// Exit codes: 0 claim holds or witness found, 1 claim fails or nothing found,
// 2 usage, input or guard error. Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgw
