#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "horolab/quadrature.hpp"

using namespace horolab;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 16, 64}) {
    auto rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
      double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
      CHECK_MESSAGE(std::fabs(s - exact) < 1e-12, "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are symmetric") {
  auto rule = gauss_legendre(33);
  for (int i = 0; i < 33; ++i) {
    CHECK(rule.nodes[i] == -rule.nodes[32 - i]);
    CHECK(rule.weights[i] == rule.weights[32 - i]);
  }
}

TEST_CASE("radial rule on (0, r)") {
  double r = 2.7;
  auto rule = radial_rule(r, 64);
  for (int k = 0; k <= 20; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    double exact = std::pow(r, k + 1) / (k + 1);
    CHECK(std::fabs(s - exact) < 1e-12 * std::max(1.0, exact));
  }
  for (double x : rule.nodes) {
    CHECK(x > 0.0);
    CHECK(x < r);
  }
}

TEST_CASE("direction weights sum to the unit sphere measure") {
  auto add = [](const DirectionGrid& g) {
    double s = 0.0;
    for (double w : g.weights) s += w;
    return s;
  };
  CHECK(std::fabs(add(direction_grid(2, 256)) - 2 * std::numbers::pi) < 1e-12);
  CHECK(std::fabs(add(direction_grid(3, 32, 64)) - 4 * std::numbers::pi) < 1e-12);
  CHECK(std::fabs(add(direction_grid(3, QuadratureOrders{})) - 4 * std::numbers::pi) < 1e-12);
}

TEST_CASE("direction grids are unit and antipodal node for node") {
  for (auto g : {direction_grid(2, 256), direction_grid(3, 32, 64), direction_grid(3, 8, 12)}) {
    std::size_t n = g.directions.size(), half = n / 2;
    REQUIRE(n % 2 == 0);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(norm(g.directions[i]) - 1.0) < 1e-15);
    for (std::size_t i = 0; i < half; ++i) {
      CHECK(g.directions[i + half] == -g.directions[i]);
      CHECK(g.weights[i + half] == g.weights[i]);
    }
  }
}

TEST_CASE("3-D grid integrates spherical polynomials") {
  auto g = direction_grid(3, 32, 64);
  double z2 = 0.0, x2y2 = 0.0;
  for (std::size_t i = 0; i < g.directions.size(); ++i) {
    const auto& u = g.directions[i];
    z2 += g.weights[i] * u[2] * u[2];
    x2y2 += g.weights[i] * u[0] * u[0] * u[1] * u[1];
  }
  CHECK(std::fabs(z2 - 4 * std::numbers::pi / 3) < 1e-12);
  CHECK(std::fabs(x2y2 - 4 * std::numbers::pi / 15) < 1e-12);
}

TEST_CASE("one-dimensional grid") {
  auto g = direction_grid(1, 2);
  REQUIRE(g.directions.size() == 2);
  CHECK(g.directions[0] == Vec{1.0});
  CHECK(g.directions[1] == Vec{-1.0});
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / (i + 1);
  double naive = 0.0;
  for (double x : v) naive += x;
  CHECK(pairwise_sum(v) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);

  // Mirrored halves cancel exactly.
  std::vector<double> w = {0.1, 1e-17, 3.3, -7.25, -0.1, -1e-17, -3.3, 7.25};
  CHECK(pairwise_sum(w) == 0.0);
}

TEST_CASE("doubled orders") {
  QuadratureOrders q;
  auto d = q.doubled();
  CHECK(d.directions_2d == 512);
  CHECK(d.polar_3d == 64);
  CHECK(d.azimuth_3d == 128);
  CHECK(d.radial == 128);
  CHECK(q.direction_order(2) == 256);
  CHECK(q.direction_order(3) == 32);
}
