#include "horolab/conformal.hpp"

#include <cmath>

namespace horolab {

ConformalFactor flat_factor() {
  ConformalFactor f;
  f.name = "flat";
  f.value = [](double, double) { return 0.0; };
  f.gradient = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  f.laplacian = [](double, double) { return 0.0; };
  return f;
}

ConformalFactor bump_factor(double amplitude, double width) {
  const double s2 = width * width;
  ConformalFactor f;
  f.name = "bump";
  f.value = [=](double x, double y) { return amplitude * std::exp(-(x * x + y * y) / s2); };
  f.gradient = [=](double x, double y) {
    const double l = amplitude * std::exp(-(x * x + y * y) / s2);
    return std::array<double, 2>{-2.0 * x / s2 * l, -2.0 * y / s2 * l};
  };
  f.laplacian = [=](double x, double y) {
    const double rho2 = x * x + y * y;
    const double l = amplitude * std::exp(-rho2 / s2);
    return l * (4.0 * rho2 / (s2 * s2) - 4.0 / s2);
  };
  return f;
}

ConformalFactor wave_factor(double amplitude) {
  ConformalFactor f;
  f.name = "wave";
  f.value = [=](double x, double y) { return amplitude * std::sin(x) * std::sin(y); };
  f.gradient = [=](double x, double y) {
    return std::array<double, 2>{amplitude * std::cos(x) * std::sin(y),
                                 amplitude * std::sin(x) * std::cos(y)};
  };
  f.laplacian = [=](double x, double y) { return -2.0 * amplitude * std::sin(x) * std::sin(y); };
  return f;
}

ConformalFactor poincare_factor() {
  ConformalFactor f;
  f.name = "poincare";
  f.value = [](double x, double y) { return std::log(2.0 / (1.0 - x * x - y * y)); };
  f.gradient = [](double x, double y) {
    const double d = 1.0 - x * x - y * y;
    return std::array<double, 2>{2.0 * x / d, 2.0 * y / d};
  };
  // Constant curvature -1: laplacian(lambda) = exp(2 lambda).
  f.laplacian = [](double x, double y) {
    const double d = 1.0 - x * x - y * y;
    return 4.0 / (d * d);
  };
  f.domain_radius = 1.0;
  return f;
}

}  // namespace horolab
