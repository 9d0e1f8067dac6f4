#include "horolab/geodesics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "horolab/errors.hpp"

namespace horolab::geodesics {

namespace {

// State layout: x, y, vx, vy, then two extra co-integrated quantities
// (Jacobi j, j' or a transported vector).
using State = std::array<double, 6>;

enum class Extra { kNone, kJacobi, kTransport };

double laplacian_of(const ConformalFactor& s, double x, double y) {
  if (s.laplacian) return s.laplacian(x, y);
  const double h = kCurvatureFdStep;
  return (s.value(x + h, y) + s.value(x - h, y) + s.value(x, y + h) + s.value(x, y - h) -
          4.0 * s.value(x, y)) /
         (h * h);
}

double curvature_at(const ConformalFactor& s, double x, double y) {
  return -std::exp(-2.0 * s.value(x, y)) * laplacian_of(s, x, y);
}

template <Extra kExtra>
State rhs(const ConformalFactor& s, const State& u) {
  const auto g = s.gradient(u[0], u[1]);
  const double vx = u[2], vy = u[3];
  const double q = vx * vx - vy * vy;
  State d{};
  d[0] = vx;
  d[1] = vy;
  d[2] = -g[0] * q - 2.0 * g[1] * vx * vy;
  d[3] = g[1] * q - 2.0 * g[0] * vx * vy;
  if constexpr (kExtra == Extra::kJacobi) {
    d[4] = u[5];
    d[5] = -curvature_at(s, u[0], u[1]) * u[4];
  } else if constexpr (kExtra == Extra::kTransport) {
    const double wx = u[4], wy = u[5];
    d[4] = -(g[0] * vx * wx + g[1] * (vx * wy + vy * wx) - g[0] * vy * wy);
    d[5] = -(-g[1] * vx * wx + g[0] * (vx * wy + vy * wx) + g[1] * vy * wy);
  }
  return d;
}

template <Extra kExtra>
void rk4_step(const ConformalFactor& s, State& u, double h) {
  auto axpy = [](const State& a, double c, const State& b) {
    State r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + c * b[i];
    return r;
  };
  const State k1 = rhs<kExtra>(s, u);
  const State k2 = rhs<kExtra>(s, axpy(u, 0.5 * h, k1));
  const State k3 = rhs<kExtra>(s, axpy(u, 0.5 * h, k2));
  const State k4 = rhs<kExtra>(s, axpy(u, h, k3));
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

double speed(const ConformalFactor& s, const State& u) {
  return std::exp(s.value(u[0], u[1])) * std::hypot(u[2], u[3]);
}

int step_count(double length, double step) {
  return std::max(1, static_cast<int>(std::ceil(length / step - 1e-9)));
}

// Endpoint of the geodesic with initial velocity v over unit parameter time.
Vec endpoint_once(const ConformalFactor& s, const Point& p, const Vec& v, double step) {
  State u{p.coords[0], p.coords[1], v[0], v[1], 0.0, 0.0};
  const double s0 = speed(s, u);
  const int n = step_count(1.0, step);
  const double h = 1.0 / n;
  double drift = 0.0;
  for (int i = 0; i < n; ++i) {
    rk4_step<Extra::kNone>(s, u, h);
    drift = std::fmax(drift, std::fabs(speed(s, u) - s0));
  }
  if (!(drift <= kEnergyDriftLimit))
    throw AccuracyError("geodesic energy drift " + std::to_string(drift));
  return Vec{u[0], u[1]};
}

}  // namespace

GeodesicPath integrate_geodesic(const ConformalFactor& s, const Point& p, const Vec& v, double T,
                                double step) {
  if (!(step > 0.0)) throw ContractViolation("integrate_geodesic: step must be positive");
  const int n = step_count(T, step);
  const double h = T / n;
  GeodesicPath path;
  path.step = h;
  path.samples.reserve(static_cast<std::size_t>(n) + 1);
  State u{p.coords[0], p.coords[1], v[0], v[1], 0.0, 0.0};
  const double s0 = speed(s, u);
  path.samples.push_back({0.0, Vec{u[0], u[1]}, Vec{u[2], u[3]}});
  for (int i = 1; i <= n; ++i) {
    rk4_step<Extra::kNone>(s, u, h);
    path.samples.push_back({i * h, Vec{u[0], u[1]}, Vec{u[2], u[3]}});
    path.energy_drift = std::fmax(path.energy_drift, std::fabs(speed(s, u) - s0));
  }
  if (!(path.energy_drift <= kEnergyDriftLimit))
    throw AccuracyError("geodesic energy drift " + std::to_string(path.energy_drift));
  return path;
}

Point geodesic_endpoint(const ConformalFactor& s, const Point& p, const Vec& v) {
  if (v[0] == 0.0 && v[1] == 0.0) return p;
  double step = 1.0 / kDefaultSteps;
  for (int k = 0;; ++k) {
    try {
      return Point{endpoint_once(s, p, v, step)};
    } catch (const AccuracyError&) {
      if (k == kMaxHalvings) throw;
      step *= 0.5;
    }
  }
}

ShootingResult shoot_log(const ConformalFactor& s, const Point& p, const Point& q, double tol,
                         int max_iter) {
  ShootingResult result{{p, Vec::zeros(2)}, 0, 0.0};
  if (p.coords == q.coords) return result;

  auto residual = [&](const Vec& v) { return geodesic_endpoint(s, p, v).coords - q.coords; };

  Vec v = q.coords - p.coords;
  Vec f = residual(v);
  double res = norm(f);
  int evaluations = 1;
  for (; evaluations <= max_iter; ++evaluations) {
    if (res <= tol) {
      result.velocity.components = v;
      result.iterations = evaluations;
      result.terminal_error = res;
      return result;
    }
    // Central-difference Jacobian of the shooting map.
    const double h = kShootingFdStep;
    std::array<Vec, 2> col;
    for (std::size_t k = 0; k < 2; ++k) {
      const Vec e = Vec::unit(2, k);
      col[k] = (residual(v + h * e) - residual(v - h * e)) * (0.5 / h);
    }
    const double det = col[0][0] * col[1][1] - col[1][0] * col[0][1];
    if (det == 0.0 || !std::isfinite(det)) break;
    const Vec dv{-(col[1][1] * f[0] - col[1][0] * f[1]) / det,
                 -(-col[0][1] * f[0] + col[0][0] * f[1]) / det};

    // Halve the Newton step until the residual decreases.
    double damping = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30 && !accepted; ++k, damping *= 0.5) {
      const Vec trial = v + damping * dv;
      try {
        const Vec ft = residual(trial);
        if (norm(ft) < res) {
          v = trial;
          f = ft;
          res = norm(ft);
          accepted = true;
        }
      } catch (const AccuracyError&) {
      }
    }
    if (!accepted) break;
  }
  if (res <= tol) {
    result.velocity.components = v;
    result.iterations = evaluations;
    result.terminal_error = res;
    return result;
  }
  throw ShootingFailure("shoot_log did not converge, best residual " + std::to_string(res), res);
}

double gauss_curvature(const ConformalFactor& s, const Point& p) {
  return curvature_at(s, p.coords[0], p.coords[1]);
}

void march_radial(const ConformalFactor& s, const Point& p, const Vec& chart_direction,
                  std::span<const double> radii, double max_step, std::span<RadialSample> out) {
  const double scale = std::exp(-s.value(p.coords[0], p.coords[1]));
  for (int attempt = 0;; ++attempt) {
    State u{p.coords[0], p.coords[1], scale * chart_direction[0], scale * chart_direction[1], 0.0,
            1.0};
    double drift = 0.0;
    double t = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const int n = step_count(radii[k] - t, max_step);
      const double h = (radii[k] - t) / n;
      for (int i = 0; i < n; ++i) {
        rk4_step<Extra::kJacobi>(s, u, h);
        drift = std::fmax(drift, std::fabs(speed(s, u) - 1.0));
      }
      t = radii[k];
      out[k] = {Vec{u[0], u[1]}, u[4]};
    }
    if (drift <= kEnergyDriftLimit) break;
    if (attempt == kMaxHalvings)
      throw AccuracyError("radial march energy drift " + std::to_string(drift));
    max_step *= 0.5;
  }
  for (const auto& sample : out)
    if (!(sample.density > 0.0))
      throw ConjugatePointError("Jacobi field vanished: conjugate point inside the ball");
}

double jacobi_density(const ConformalFactor& s, const Point& p, double phi, double r) {
  if (r == 0.0) return 0.0;
  const double radius[1] = {r};
  RadialSample out[1];
  march_radial(s, p, Vec{std::cos(phi), std::sin(phi)}, radius, r / kDefaultSteps, out);
  return out[0].density;
}

std::vector<Vec> transported_field(const ConformalFactor& s, const GeodesicPath& path,
                                   const Vec& v) {
  const auto& first = path.samples.front();
  State u{first.position[0], first.position[1], first.velocity[0], first.velocity[1], v[0], v[1]};
  auto norm_g = [&](const State& w) { return std::exp(s.value(w[0], w[1])) * std::hypot(w[4], w[5]); };
  const double n0 = norm_g(u);
  std::vector<Vec> field;
  field.reserve(path.samples.size());
  field.push_back(v);
  double drift = 0.0;
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    rk4_step<Extra::kTransport>(s, u, path.samples[i].t - path.samples[i - 1].t);
    field.push_back(Vec{u[4], u[5]});
    drift = std::fmax(drift, std::fabs(norm_g(u) - n0));
  }
  if (!(drift <= kEnergyDriftLimit * std::fmax(1.0, n0)))
    throw AccuracyError("parallel transport norm drift " + std::to_string(drift));
  return field;
}

TangentVector transport_along(const ConformalFactor& s, const GeodesicPath& path, const Vec& v) {
  return {Point{path.samples.back().position}, transported_field(s, path, v).back()};
}

}  // namespace horolab::geodesics
