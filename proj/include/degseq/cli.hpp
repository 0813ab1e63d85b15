#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degseq {

/// Runs the command-line interface on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`. Exit codes:
///   0  accepted / true / success
///   1  rejected / false / no counterexample applies
///   2  usage or domain error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degseq
