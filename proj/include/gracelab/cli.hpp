#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gracelab {

namespace exit_code {
constexpr int ok = 0;
constexpr int counterexample = 1;
constexpr int usage = 2;
} // namespace exit_code

/// Runs the gracelab command line. `args` excludes the program name.
/// Returns 0 when verified or found, 1 on a counterexample or when nothing
/// was found, 2 on usage errors and malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gracelab
