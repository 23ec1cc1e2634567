#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cameral {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

// Runs the full acceptance suite at the pinned tolerances; prints one
// pass/fail line per criterion on `log`.
AcceptanceReport run_acceptance(std::uint64_t seed, std::ostream& log);

}  // namespace cameral
