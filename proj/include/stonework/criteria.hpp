#pragma once

#include <cstdint>
#include <string>
#include <vector>

// The acceptance checks, each a self-contained sweep with a time limit.
namespace stonework {

struct CriterionInfo {
  int id = 0;
  std::string name;
  double limit_seconds = 0;
};

struct CriterionResult {
  CriterionInfo info;
  /// All instances checked held (the time limit is judged separately).
  bool holds = false;
  double seconds = 0;
  std::int64_t instances = 0;
  /// First failing instance, or a short summary.
  std::string detail;

  bool passed() const { return holds && seconds < info.limit_seconds; }
};

std::vector<CriterionInfo> criteria();
/// Throws UnknownSuite for ids outside 1..15.
CriterionResult run_criterion(int id);
std::string format_result(const CriterionResult& r);

}  // namespace stonework
