#include "horolab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "horolab/errors.hpp"

namespace horolab {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ContractViolation("gauss_legendre: order must be positive");
  GaussLegendre rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  // P_n and P_{n-1} at x by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, p0};
  };
  for (int i = 0; i < half; ++i) {
    // Newton from the standard initial guess converges to the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [pn, pm] = legendre(x);
      const double dx = pn / (n * (x * pn - pm) / (x * x - 1.0));
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const auto [pn, pm] = legendre(x);
    const double dp = n * (x * pn - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    if (lo == hi) {
      rule.nodes[lo] = 0.0;
      rule.weights[lo] = w;
    } else {
      rule.nodes[hi] = x;
      rule.nodes[lo] = -x;
      rule.weights[hi] = w;
      rule.weights[lo] = w;
    }
  }
  return rule;
}

DirectionGrid direction_grid(int dim, int order, int azimuth) {
  DirectionGrid grid;
  grid.order = order;
  if (dim == 1) {
    grid.directions = {Vec{1.0}, Vec{-1.0}};
    grid.weights = {1.0, 1.0};
    return grid;
  }
  if (dim == 2) {
    if (order < 2 || order % 2) throw ContractViolation("direction_grid: order must be even");
    const auto n = static_cast<std::size_t>(order);
    grid.directions.resize(n);
    grid.weights.assign(n, 2.0 * std::numbers::pi / order);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / order;
      grid.directions[k] = Vec{std::cos(phi), std::sin(phi)};
      grid.directions[k + n / 2] = -grid.directions[k];
    }
    return grid;
  }
  if (dim == 3) {
    if (order < 2 || order % 2 || azimuth < 2 || azimuth % 2)
      throw ContractViolation("direction_grid: polar and azimuth orders must be even");
    const GaussLegendre gl = gauss_legendre(order);
    const auto half = static_cast<std::size_t>(order / 2) * static_cast<std::size_t>(azimuth);
    grid.directions.resize(2 * half);
    grid.weights.resize(2 * half);
    std::size_t idx = 0;
    // Upper hemisphere nodes (z > 0) first; antipodes fill the second half.
    for (int i = order / 2; i < order; ++i) {
      const double z = gl.nodes[static_cast<std::size_t>(i)];
      const double rho = std::sqrt(1.0 - z * z);
      const double w = gl.weights[static_cast<std::size_t>(i)] * 2.0 * std::numbers::pi / azimuth;
      for (int j = 0; j < azimuth; ++j, ++idx) {
        const double phi = 2.0 * std::numbers::pi * j / azimuth;
        grid.directions[idx] = Vec{rho * std::cos(phi), rho * std::sin(phi), z};
        grid.weights[idx] = w;
        grid.directions[idx + half] = -grid.directions[idx];
        grid.weights[idx + half] = w;
      }
    }
    return grid;
  }
  throw ContractViolation("direction_grid: dimension must be 1, 2 or 3");
}

DirectionGrid direction_grid(int dim, const QuadratureOrders& orders) {
  return dim == 3 ? direction_grid(3, orders.polar_3d, orders.azimuth_3d)
                  : direction_grid(dim, orders.directions_2d);
}

RadialRule radial_rule(double r, int order) {
  const GaussLegendre gl = gauss_legendre(order);
  RadialRule rule;
  rule.order = order;
  rule.nodes.reserve(gl.nodes.size());
  rule.weights.reserve(gl.nodes.size());
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    rule.nodes.push_back(0.5 * r * (1.0 + gl.nodes[i]));
    rule.weights.push_back(0.5 * r * gl.weights[i]);
  }
  return rule;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 4) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace horolab
