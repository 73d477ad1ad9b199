#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pks {

struct AuditCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Fast invariant suites over every module on small grids. Deterministic.
[[nodiscard]] std::vector<AuditCheck> run_invariant_audit();

[[nodiscard]] bool all_passed(const std::vector<AuditCheck>& checks);
[[nodiscard]] nlohmann::json to_json(const std::vector<AuditCheck>& checks);

}  // namespace pks
