#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ultrauniform {

struct Violation {
  std::string axiom;
  nlohmann::json witness;
};

/// Outcome of an axiom check. Valid exactly when no violation was recorded.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  void add(std::string axiom, nlohmann::json witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

}  // namespace ultrauniform
