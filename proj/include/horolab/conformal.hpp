#pragma once

#include <array>
#include <functional>
#include <string>

namespace horolab {

/// Log-conformal factor lambda of a surface metric g = exp(2 lambda)(dx^2 + dy^2).
struct ConformalFactor {
  std::string name;
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;
  /// Flat Laplacian of lambda. Optional; curvature falls back to central
  /// differences when empty.
  std::function<double(double, double)> laplacian;
  /// Chart radius of the working domain (open disk for the Poincare chart).
  double domain_radius = 6.0;
};

ConformalFactor flat_factor();

/// a * exp(-(x^2 + y^2) / s^2); catalog instance uses (a, s) = (0.2, 1.5).
ConformalFactor bump_factor(double amplitude = 0.2, double width = 1.5);

/// amplitude * sin(x) sin(y); catalog instance uses 0.1.
ConformalFactor wave_factor(double amplitude = 0.1);

/// log(2 / (1 - x^2 - y^2)), the Poincare disk chart of H^2.
ConformalFactor poincare_factor();

}  // namespace horolab
