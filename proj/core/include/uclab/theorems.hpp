#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace uclab::theorems {

// Outcome of one named verification suite. Each suite replays a finite-scale
// statement exhaustively and reports per-check lines; a failure carries a
// machine-readable counterexample.
struct Report {
  std::string id;
  bool passed = true;
  std::vector<std::string> lines;       // one line per sub-check
  nlohmann::json counterexample;        // null when passed

  void check(bool ok, const std::string& what);
};

const std::vector<std::string>& all_ids();

// Runs one suite; throws InvalidInput for an unknown id.
Report run(const std::string& id);

}  // namespace uclab::theorems
