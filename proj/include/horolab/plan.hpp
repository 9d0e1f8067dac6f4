#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horolab/manifold.hpp"
#include "horolab/quadrature.hpp"

namespace horolab::cli {

/// Invalid plan file or command line; message carries "<source>:<line>: <key>: ..." diagnostics.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentPlan {
  std::string manifold_name;
  ManifoldModel manifold = ManifoldModel::euclidean(2);
  std::vector<Point> basepoints;
  std::vector<double> radii;
  std::vector<std::string> fields;
  std::vector<std::string> suites;
  /// Basis coefficients of the directions X; empty means every basis vector.
  std::vector<Vec> tangents;
  QuadratureOrders quadrature;
  std::optional<std::string> output;
};

/// Parses `key = value` lines with `#` comments and optional `[section]`
/// headers (keys inside `[quadrature]` become `quadrature.<key>`). Lists are
/// comma separated; points and tangents are `;` separated lists of
/// whitespace-separated coordinates.
ExperimentPlan parse_plan(std::istream& in, const std::string& source = "<plan>");
ExperimentPlan load_plan(const std::string& path);

}  // namespace horolab::cli
