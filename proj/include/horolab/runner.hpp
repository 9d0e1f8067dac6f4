#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "horolab/identities.hpp"
#include "horolab/plan.hpp"

namespace horolab::cli {

/// One output line; numeric columns are already formatted.
struct CsvRow {
  std::string suite;
  std::string manifold;
  std::string point;
  std::string radius;
  std::string direction;
  std::string field;
  std::string lhs;
  std::string rhs;
  std::string abs_residual;
  std::string rel_residual;
  std::string tolerance;
  bool passed = false;
};

struct RunResult {
  std::vector<CsvRow> rows;
  int passed = 0;
  int failed = 0;
  /// Cells not applicable to a field (prop31 and gradient-bound need an MVP field).
  int skipped = 0;

  int exit_status() const { return failed == 0 ? 0 : 1; }
};

/// 17 significant digits, round-trip safe.
std::string format_number(double v);
std::string format_vec(const Vec& v);

CsvRow row_from_report(std::string_view suite, const IdentityReport& report);

/// Executes every (suite, point, radius, direction, field) cell in plan
/// order. Numerical failures become failed rows; the run continues.
RunResult run(const ExperimentPlan& plan, std::ostream& log);

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

/// Human-readable listing of manifolds, fields and suites.
std::string list_catalog();

}  // namespace horolab::cli
