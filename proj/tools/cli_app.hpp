#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace groupalg::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 domain failure,
/// 2 usage/parse error. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

} // namespace groupalg::cli
