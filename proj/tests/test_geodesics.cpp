#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "horolab/conformal.hpp"
#include "horolab/errors.hpp"
#include "horolab/geodesics.hpp"
#include "horolab/manifold.hpp"
#include "horolab/poincare.hpp"

using namespace horolab;
using namespace horolab::geodesics;

namespace {

double chart_dist(const Vec& a, const Vec& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double hyperbolic_distance_from_origin(const Vec& z) {
  double rho = std::hypot(z[0], z[1]);
  return 2.0 * std::atanh(rho);
}

}  // namespace

TEST_CASE("flat geodesic is a straight line") {
  auto flat = flat_factor();
  auto path = integrate_geodesic(flat, Point{{0, 0}}, Vec{1, 0}, 2.0, 2.0 / kDefaultSteps);
  CHECK(path.samples.back().position[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(path.samples.back().position[1] == 0.0);
  CHECK(path.energy_drift <= 1e-14);
  for (std::size_t i = 1; i < path.samples.size(); ++i)
    CHECK(path.samples[i].t > path.samples[i - 1].t);
  CHECK(path.samples.front().t == 0.0);
}

TEST_CASE("non-positive step is a contract violation") {
  CHECK_THROWS_AS(integrate_geodesic(flat_factor(), Point{{0, 0}}, Vec{1, 0}, 1.0, 0.0),
                  ContractViolation);
}

TEST_CASE("bump geodesic converges under step halving") {
  auto bump = bump_factor();
  Point p{{0, -3}};
  auto coarse = integrate_geodesic(bump, p, Vec{0, 1}, 6.0, 6.0 / 256);
  auto fine = integrate_geodesic(bump, p, Vec{0, 1}, 6.0, 6.0 / 512);
  auto finer = integrate_geodesic(bump, p, Vec{0, 1}, 6.0, 6.0 / 1024);
  double d1 = chart_dist(coarse.samples.back().position, fine.samples.back().position);
  double d2 = chart_dist(fine.samples.back().position, finer.samples.back().position);
  CHECK(d1 < 1e-7);
  // Fourth-order scheme: each halving shrinks the change by about sixteen.
  CHECK(d2 <= d1 / 10.0);
  CHECK(coarse.energy_drift <= kEnergyDriftLimit);
}

TEST_CASE("Poincare disk geodesic through the origin") {
  auto disk = poincare_factor();
  auto path = integrate_geodesic(disk, Point{{0, 0}}, Vec{0.5, 0}, 1.0, 1.0 / kDefaultSteps);
  const auto& end = path.samples.back().position;
  CHECK(end[0] == doctest::Approx(std::tanh(0.5)).epsilon(1e-12));
  CHECK(std::fabs(end[1]) < 1e-15);
  CHECK(hyperbolic_distance_from_origin(end) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Poincare disk geodesic matches the hyperboloid exponential") {
  auto disk = poincare_factor();
  auto h = ManifoldModel::hyperboloid(2);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int k = 0; k < 10; ++k) {
    Point z{{coord(rng), coord(rng)}};
    Vec dz{coord(rng), coord(rng)};
    auto end = geodesic_endpoint(disk, z, dz);
    auto x = poincare::to_hyperboloid(z);
    auto expected = poincare::to_disk(exp_map(h, x, poincare::push_forward(z, dz)));
    CHECK(chart_dist(end.coords, expected.coords) < 1e-9);
  }
}

TEST_CASE("shooting examples") {
  auto flat = flat_factor();
  auto res = shoot_log(flat, Point{{1, 1}}, Point{{4, 5}});
  CHECK(max_abs_diff(res.velocity.components, {3, 4}) < 1e-14);
  CHECK(res.iterations == 1);

  auto bump = bump_factor();
  Point p{{0, -3}};
  // Unit-time log of the endpoint reached after time 2 is twice the initial velocity.
  auto path = integrate_geodesic(bump, p, Vec{0, 1}, 2.0, 2.0 / 1024);
  auto back = shoot_log(bump, p, Point{path.samples.back().position});
  CHECK(max_abs_diff(0.5 * back.velocity.components, {0, 1}) < 1e-8);
  CHECK(back.terminal_error <= kShootingTolerance);

  auto disk = poincare_factor();
  auto lg = shoot_log(disk, Point{{0, 0}}, Point{{std::tanh(0.5), 0}});
  // Metric factor 2 at the origin: hyperbolic length one needs chart speed one half.
  CHECK(lg.velocity.components[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::fabs(lg.velocity.components[1]) < 1e-12);
  auto pd = ManifoldModel::conformal(disk);
  CHECK(metric_norm(pd, lg.velocity) == doctest::Approx(1.0).epsilon(1e-9));
  auto h = ManifoldModel::hyperboloid(2);
  Point z{{0, 0}};
  auto hv = log_map(h, poincare::to_hyperboloid(z), poincare::to_hyperboloid(Point{{std::tanh(0.5), 0}}));
  CHECK(max_abs_diff(poincare::pull_back(z, hv), lg.velocity.components) < 1e-9);
}

TEST_CASE("shooting is deterministic") {
  auto wave = wave_factor();
  Point p{{0.2, -0.4}}, q{{1.3, 0.9}};
  auto a = shoot_log(wave, p, q);
  auto b = shoot_log(wave, p, q);
  CHECK(a.velocity.components == b.velocity.components);
  CHECK(a.iterations == b.iterations);
  CHECK(a.terminal_error <= kShootingTolerance);
}

TEST_CASE("shooting failure reports a residual") {
  auto wave = wave_factor();
  try {
    shoot_log(wave, Point{{0, 0}}, Point{{4, 3}}, 1e-30, 2);
    FAIL("expected a shooting failure");
  } catch (const ShootingFailure& e) {
    CHECK(e.best_residual() > 0.0);
  }
}

TEST_CASE("Gaussian curvature") {
  CHECK(gauss_curvature(flat_factor(), Point{{0.4, 1.1}}) == 0.0);
  CHECK(gauss_curvature(poincare_factor(), Point{{0, 0}}) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(gauss_curvature(poincare_factor(), Point{{0.3, -0.5}}) ==
        doctest::Approx(-1.0).epsilon(1e-6));
  double k = gauss_curvature(wave_factor(), Point{{std::numbers::pi / 2, std::numbers::pi / 2}});
  CHECK(k == doctest::Approx(0.2 * std::exp(-0.2)).epsilon(1e-6));

  // Finite-difference Laplacian path agrees with the analytic one.
  auto wave_fd = wave_factor();
  wave_fd.laplacian = nullptr;
  CHECK(gauss_curvature(wave_fd, Point{{0.7, -0.3}}) ==
        doctest::Approx(gauss_curvature(wave_factor(), Point{{0.7, -0.3}})).epsilon(1e-6));
}

TEST_CASE("Jacobi density") {
  CHECK(jacobi_density(flat_factor(), Point{{0, 0}}, 0.8, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  for (double phi : {0.0, 1.0, 2.5})
    CHECK(jacobi_density(poincare_factor(), Point{{0, 0}}, phi, 1.0) ==
          doctest::Approx(std::sinh(1.0)).epsilon(1e-8));
}

TEST_CASE("Jacobi density agrees with the variation of geodesics") {
  auto wave = wave_factor();
  Point p{{0, 0}};
  double r = 1.0, phi = 0.0, h = 1e-4;
  double scale = std::exp(-wave.value(0, 0));
  auto end_at = [&](double a) {
    return geodesic_endpoint(wave, p, Vec{r * scale * std::cos(a), r * scale * std::sin(a)}).coords;
  };
  Vec plus = end_at(phi + h), minus = end_at(phi - h), centre = end_at(phi);
  Vec d = (1.0 / (2 * h)) * (plus - minus);
  double oracle = std::exp(wave.value(centre[0], centre[1])) * std::hypot(d[0], d[1]);
  CHECK(std::fabs(jacobi_density(wave, p, phi, r) - oracle) < 1e-5);
}

TEST_CASE("flat transport leaves components unchanged") {
  auto flat = flat_factor();
  auto path = integrate_geodesic(flat, Point{{1, 2}}, Vec{0.3, -0.8}, 1.0, 1.0 / kDefaultSteps);
  auto pv = transport_along(flat, path, Vec{2, 5});
  CHECK(max_abs_diff(pv.components, {2, 5}) < 1e-14);
}

TEST_CASE("transport preserves norm and angle with the velocity") {
  auto bump = bump_factor();
  auto path = integrate_geodesic(bump, Point{{-1, 0.5}}, Vec{1.2, 0.4}, 1.5, 1.5 / kDefaultSteps);
  Vec v{0.3, 0.9};
  auto field = transported_field(bump, path, v);
  auto g = [&](const Vec& at, const Vec& a, const Vec& b) {
    return std::exp(2 * bump.value(at[0], at[1])) * dot(a, b);
  };
  double n0 = g(path.samples[0].position, v, v);
  double a0 = g(path.samples[0].position, v, path.samples[0].velocity);
  for (std::size_t i = 0; i < field.size(); ++i) {
    const auto& s = path.samples[i];
    CHECK(std::fabs(g(s.position, field[i], field[i]) - n0) < 1e-7);
    CHECK(std::fabs(g(s.position, field[i], s.velocity) - a0) < 1e-7);
  }
}

TEST_CASE("disk transport agrees with hyperboloid transport") {
  auto disk = poincare_factor();
  auto h = ManifoldModel::hyperboloid(2);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-0.4, 0.4);
  for (int k = 0; k < 10; ++k) {
    Point z{{coord(rng), coord(rng)}};
    Vec dz{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
    auto path = integrate_geodesic(disk, z, dz, 1.0, 1.0 / 1024);
    auto pv = transport_along(disk, path, v);
    auto x = poincare::to_hyperboloid(z);
    auto y = poincare::to_hyperboloid(pv.base);
    auto expected = parallel_transport(h, x, y, poincare::push_forward(z, v));
    CHECK(max_abs_diff(poincare::pull_back(pv.base, expected), pv.components) < 1e-6);
  }
}

TEST_CASE("flat reduction reproduces Euclidean closed forms") {
  auto flat = ManifoldModel::conformal(flat_factor());
  auto e = ManifoldModel::euclidean(2);
  Point p{{0.5, -1.0}}, q{{2.0, 1.5}};
  CHECK(max_abs_diff(log_map(flat, p, q).components, log_map(e, p, q).components) < 1e-12);
  CHECK(std::fabs(distance(flat, p, q) - distance(e, p, q)) < 1e-12);
  CHECK(max_abs_diff(exp_map(flat, p, TangentVector{p, {1.5, 2.5}}).coords, q.coords) < 1e-12);
  TangentVector u{p, {0.6, 0.8}};
  CHECK(std::fabs(volume_density(flat, p, u, 1.7) - 1.7) < 1e-12);
  TangentVector v{p, {3, -1}};
  CHECK(max_abs_diff(parallel_transport(flat, p, q, v).components, v.components) < 1e-12);
}

TEST_CASE("hyperbolic cross-validation on seeded configurations") {
  auto pd = ManifoldModel::conformal(poincare_factor());
  auto h = ManifoldModel::hyperboloid(2);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rad(0.2, 3.0);
  std::uniform_real_distribution<double> base(0.0, 0.6);
  for (int k = 0; k < 20; ++k) {
    double a = angle(rng), rb = base(rng);
    Point z{{rb * std::cos(a), rb * std::sin(a)}};
    auto x = poincare::to_hyperboloid(z);
    auto frame = orthonormal_basis(h, x);
    double phi = angle(rng), r = rad(rng);
    TangentVector u{x, std::cos(phi) * frame[0].components + std::sin(phi) * frame[1].components};
    auto y = exp_map(h, x, TangentVector{x, r * u.components});
    auto w = poincare::to_disk(y);

    CHECK(std::fabs(distance(pd, z, w) - r) < 1e-6);
    auto lg = log_map(pd, z, w);
    auto hv = log_map(h, x, y);
    CHECK(max_abs_diff(lg.components, poincare::pull_back(z, hv)) < 1e-6);
    TangentVector ud{z, poincare::pull_back(z, u)};
    CHECK(std::fabs(volume_density(pd, z, ud, r) - std::sinh(r)) < 1e-6 * std::sinh(r));
  }
}
