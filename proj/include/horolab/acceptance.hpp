#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "horolab/manifold.hpp"
#include "horolab/runner.hpp"

namespace horolab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0.0;
  double time_limit = 0.0;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<cli::CsvRow> rows;

  bool within_time() const { return seconds < time_limit; }
  bool passed() const { return failures.empty() && within_time(); }
};

inline constexpr int kCriterionCount = 9;
inline constexpr double kTotalTimeLimit = 600.0;

/// The two basepoints used for every catalog manifold.
std::vector<Point> standard_basepoints(const ManifoldModel& m);
inline const std::vector<double> kStandardRadii = {0.5, 1.0, 2.0};

/// Runs one criterion (1..9) with the built-in defaults.
CriterionResult run_criterion(int id);

/// "PASS  3  <title>  (n checks, t s / limit s)" plus failure details.
std::string summary_line(const CriterionResult& result);

}  // namespace horolab::acceptance
