#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieeq/root_system.hpp"

namespace lieeq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;  // not applicable to the requested group
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9). With a group filter, only the
/// checks that involve that group run; a criterion with none is skipped.
CriterionResult run_criterion(int id, std::optional<GroupId> only = std::nullopt);
std::vector<CriterionResult> run_acceptance(std::optional<GroupId> only = std::nullopt);

/// "PASS [3] Character engine (12.1 s / 120 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace lieeq
