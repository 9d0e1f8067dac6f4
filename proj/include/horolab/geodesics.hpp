#pragma once

#include <span>
#include <vector>

#include "horolab/conformal.hpp"
#include "horolab/manifold.hpp"
#include "horolab/vec.hpp"

namespace horolab::geodesics {

/// Fixed steps per geodesic (step = length / 256).
inline constexpr int kDefaultSteps = 256;
inline constexpr double kEnergyDriftLimit = 1e-7;
inline constexpr int kMaxHalvings = 6;
inline constexpr double kShootingFdStep = 1e-6;
inline constexpr double kCurvatureFdStep = 1e-4;
inline constexpr double kShootingTolerance = 1e-11;
inline constexpr int kShootingMaxIterations = 50;

struct GeodesicSample {
  double t;
  Vec position;  ///< chart coordinates
  Vec velocity;  ///< chart components
};

struct GeodesicPath {
  std::vector<GeodesicSample> samples;
  double step = 0.0;
  /// max over samples of | |velocity|_g - |velocity(0)|_g |
  double energy_drift = 0.0;
};

struct ShootingResult {
  TangentVector velocity;
  int iterations = 0;
  double terminal_error = 0.0;
};

/// Classical RK4 for the conformal geodesic equations over [0, T].
/// Throws AccuracyError when the speed drifts by more than kEnergyDriftLimit.
GeodesicPath integrate_geodesic(const ConformalFactor& s, const Point& p, const Vec& v, double T,
                                double step);

/// exp_p(v) with the default step and the halve-and-retry policy.
Point geodesic_endpoint(const ConformalFactor& s, const Point& p, const Vec& v);

/// Inverse exponential map by damped Newton shooting from the chart difference q - p.
ShootingResult shoot_log(const ConformalFactor& s, const Point& p, const Point& q,
                         double tol = kShootingTolerance, int max_iter = kShootingMaxIterations);

double gauss_curvature(const ConformalFactor& s, const Point& p);

/// j(r) for j'' + K j = 0, j(0) = 0, j'(0) = 1 along the unit-speed geodesic
/// leaving p at chart angle phi.
double jacobi_density(const ConformalFactor& s, const Point& p, double phi, double r);

/// Transported vector at every sample of the path.
std::vector<Vec> transported_field(const ConformalFactor& s, const GeodesicPath& path,
                                   const Vec& v);

TangentVector transport_along(const ConformalFactor& s, const GeodesicPath& path, const Vec& v);

/// Position and Jacobi density at one radius of a polar march.
struct RadialSample {
  Vec position;
  double density = 0.0;
};

/// Marches the unit-speed geodesic leaving p along the chart unit vector
/// `chart_direction` through increasing radii,
/// with steps no larger than max_step, co-integrating the Jacobi equation.
/// Retries with halved steps on drift. Throws ConjugatePointError if j <= 0.
void march_radial(const ConformalFactor& s, const Point& p, const Vec& chart_direction,
                  std::span<const double> radii, double max_step, std::span<RadialSample> out);

}  // namespace horolab::geodesics
