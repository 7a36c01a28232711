#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbarkit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs every acceptance criterion, printing one PASS/FAIL line each.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

}  // namespace hbarkit
