#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uclab::cli {

// Batch front door. Exit codes: 0 = pass, 1 = a violation was found (a
// machine-readable counterexample accompanies it on stdout or --json),
// 2 = input error (unknown subcommand, malformed JSON, cap violations).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace uclab::cli
