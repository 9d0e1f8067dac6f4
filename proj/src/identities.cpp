#include "horolab/identities.hpp"

#include <algorithm>
#include <cmath>

#include "horolab/errors.hpp"

namespace horolab {

namespace {

double magnitude(const Vec& v) { return norm(v); }

ReportContext context_of(const ManifoldModel& m, const Point& p, double r, Vec direction = {},
                         std::string field = {}) {
  return {m.name(), p.coords, r, direction, std::move(field)};
}

double one(const Point&) { return 1.0; }

// Basis coefficients of X, with values within 1e-14 of 0 or +-1 made exact so
// that basis vectors select single components without rounding.
Vec coefficients(const ManifoldModel& m, const std::vector<TangentVector>& basis,
                 const TangentVector& X) {
  Vec c = to_basis(m, basis, X);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (double snap : {0.0, 1.0, -1.0})
      if (std::fabs(c[i] - snap) < 1e-14) c[i] = snap;
  }
  return c;
}

}  // namespace

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Lemma21: return "lemma21";
    case Identity::MovingBall: return "moving-ball";
    case Identity::Prop31: return "prop31";
    case Identity::GradientBound: return "gradient-bound";
    case Identity::HNormBound: return "hnorm-bound";
    case Identity::MVP: return "mvp-check";
    case Identity::ConstantFieldIdentity: return "constant-identity";
  }
  return "unknown";
}

std::string_view kclass_name(KClass k) {
  switch (k) {
    case KClass::Vanishing: return "vanishing";
    case KClass::BoundedNonzero: return "bounded_nonzero";
    case KClass::Unbounded: return "unbounded";
  }
  return "unknown";
}

IdentityReport equality_report(Identity id, Vec lhs, Vec rhs, double tolerance,
                               ReportContext context, double scale_floor) {
  IdentityReport rep{id, lhs, rhs, 0.0, 0.0, tolerance, false, std::move(context)};
  rep.abs_residual = magnitude(lhs - rhs);
  rep.rel_residual =
      rep.abs_residual / std::max({magnitude(lhs), magnitude(rhs), scale_floor});
  rep.passed = rep.rel_residual <= tolerance;
  return rep;
}

IdentityReport bound_report(Identity id, double lhs, double rhs, double tolerance,
                            ReportContext context) {
  IdentityReport rep{id, Vec{lhs}, Vec{rhs}, 0.0, 0.0, tolerance, false, std::move(context)};
  rep.abs_residual = std::max(0.0, lhs - rhs);
  rep.rel_residual = rep.abs_residual / std::max({std::fabs(lhs), std::fabs(rhs), 1e-12});
  rep.passed = rep.rel_residual <= tolerance;
  return rep;
}

double cos_angle(const ManifoldModel& m, const Point& p, const TangentVector& X, const Point& q) {
  if (max_abs_diff(p.coords, q.coords) == 0.0)
    throw DomainError("cos_angle: q coincides with p");
  const TangentVector v = log_map(m, p, q);
  const double c = metric_inner(m, p, X, v) / (metric_norm(m, X) * metric_norm(m, v));
  return std::clamp(c, -1.0, 1.0);
}

double mean_value(const ManifoldModel& m, const ScalarField& u, const Point& p, double r,
                  const QuadratureOrders& orders) {
  const PolarGrid ball = PolarGrid::ball(m, p, r, orders);
  return ball.integrate(PointFunction(u.evaluate)) / ball.integrate(PointFunction(one));
}

double directional_derivative(const ManifoldModel& m, const ScalarField& u, const Point& p,
                              const TangentVector& X) {
  if (u.directional_derivative) return u.directional_derivative(p, X);
  const double h = kDirectionalStep;
  const Point plus = exp_map(m, p, {p, h * X.components});
  const Point minus = exp_map(m, p, {p, -h * X.components});
  return (u.evaluate(plus) - u.evaluate(minus)) / (2.0 * h);
}

IdentityReport lemma21_residual(const ManifoldModel& m, const Point& p, double r,
                                const QuadratureOrders& orders) {
  const Vec lhs = grad_volume_fd_coefficients(m, p, r, kGradVolumeStep, orders);
  const Vec rhs = (1.0 / r) * stability_radial_derivative_coefficients(m, p, r, orders);
  return equality_report(Identity::Lemma21, lhs, rhs, kLemma21Tolerance, context_of(m, p, r));
}

IdentityReport moving_ball_derivative_check(const ManifoldModel& m, const ScalarField& u,
                                            const Point& p, const TangentVector& X, double r,
                                            const QuadratureOrders& orders) {
  const auto basis = orthonormal_basis(m, p);
  const Vec xc = coefficients(m, basis, X);
  const double h = kMovingBallStep;
  const PointFunction f = u.evaluate;
  const double ahead = ball_integral(m, exp_map(m, p, {p, h * X.components}), r, f, orders);
  const double behind = ball_integral(m, exp_map(m, p, {p, -h * X.components}), r, f, orders);
  const double lhs = (ahead - behind) / (2.0 * h);
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  const double rhs = sphere.integrate([&](const PolarSample& s) {
    return u.evaluate(s.q) * dot(s.direction, xc);
  });
  // Both sides vanish by symmetry in some configurations; measure against the
  // size of the flux integrand there instead of against roundoff.
  const double magnitude = sphere.integrate([&](const PolarSample& s) {
    return std::fabs(u.evaluate(s.q) * dot(s.direction, xc));
  });
  return equality_report(Identity::MovingBall, Vec{lhs}, Vec{rhs}, kMovingBallTolerance,
                         context_of(m, p, r, xc, u.name), kMovingBallScaleFloor * magnitude);
}

IdentityReport prop31_residual(const ManifoldModel& m, const ScalarField& u, const Point& p,
                               const TangentVector& X, double r, const QuadratureOrders& orders) {
  if (!u.claims_mvp)
    throw PreconditionError("prop31: field " + u.name + " does not have the mean-value property");
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  const double V = PolarGrid::ball(m, p, r, orders).integrate(PointFunction(one));
  const Vec xc = coefficients(m, sphere.basis(), X);
  const double flux = sphere.integrate([&](const PolarSample& s) {
    return u.evaluate(s.q) * dot(s.direction, xc);
  });
  const Vec dH = r * sphere.integrate_direction();
  const double rhs = flux / V - (1.0 / r) * (u.evaluate(p) / V) * dot(dH, xc);
  const double lhs = directional_derivative(m, u, p, X);
  // Unit scale floor: X u(p) = 0 is a legitimate value.
  return equality_report(Identity::Prop31, Vec{lhs}, Vec{rhs}, kProp31Tolerance,
                         context_of(m, p, r, xc, u.name), 1.0);
}

IdentityReport constant_field_identity(const ManifoldModel& m, const Point& p,
                                       const TangentVector& X, double r,
                                       const QuadratureOrders& orders) {
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  const Vec xc = coefficients(m, sphere.basis(), X);
  const double lhs =
      sphere.integrate([&](const PolarSample& s) { return dot(s.direction, xc); });
  const Vec dH = r * sphere.integrate_direction();
  const double rhs = (1.0 / r) * dot(dH, xc);
  return equality_report(Identity::ConstantFieldIdentity, Vec{lhs}, Vec{rhs},
                         kConstantIdentityTolerance, context_of(m, p, r, xc, "constant"));
}

std::vector<IdentityReport> gradient_bound_check(const ManifoldModel& m, const ScalarField& u,
                                                 const Point& p, double r,
                                                 const QuadratureOrders& orders) {
  if (!u.claims_mvp)
    throw PreconditionError("gradient-bound: field " + u.name +
                            " does not have the mean-value property");
  if (!u.sup_bound) throw PreconditionError("gradient-bound: field " + u.name + " has no sup bound");
  const double alpha = *u.sup_bound;
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  double observed = std::fabs(u.evaluate(p));
  for (std::size_t k = 0; k < sphere.directions().directions.size(); ++k)
    observed = std::max(observed, std::fabs(u.evaluate(sphere.node(k, 0))));
  if (observed > alpha)
    throw PreconditionError("gradient-bound: |" + u.name + "| exceeds its sup bound on S(p,r)");

  const double A = sphere.integrate(PointFunction(one));
  const double V = PolarGrid::ball(m, p, r, orders).integrate(PointFunction(one));
  std::vector<IdentityReport> reports;
  for (const TangentVector& e : sphere.basis()) {
    const double lhs = std::fabs(directional_derivative(m, u, p, e));
    reports.push_back(bound_report(Identity::GradientBound, lhs, 2.0 * alpha * A / V,
                                   kGradientBoundSlack,
                                   context_of(m, p, r, coefficients(m, sphere.basis(), e), u.name)));
  }
  return reports;
}

IdentityReport hnorm_bound_check(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders) {
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  const double A = sphere.integrate(PointFunction(one));
  // (1/r) dH/dr = (1/r) * r * (integral of the unit direction).
  const double lhs = norm(sphere.integrate_direction());
  return bound_report(Identity::HNormBound, lhs, A, kHNormSlack, context_of(m, p, r));
}

IdentityReport mvp_check(const ManifoldModel& m, const ScalarField& u, const Point& p, double r,
                         const QuadratureOrders& orders) {
  const double mean = mean_value(m, u, p, r, orders);
  return equality_report(Identity::MVP, Vec{mean}, Vec{u.evaluate(p)}, kMvpTolerance,
                         context_of(m, p, r, {}, u.name), 1.0);
}

KInfinityScan kinfinity_scan(const ManifoldModel& m, const Point& p, const std::vector<double>& radii,
                             const QuadratureOrders& orders) {
  if (radii.empty()) throw PreconditionError("kinfty: no radii");
  const double bound = injectivity_bound(m, p);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1])))
      throw PreconditionError("kinfty: radii must be positive and strictly increasing");
    if (radii[i] >= bound)
      throw PreconditionError("kinfty: radius beyond the injectivity bound of " + m.name());
  }
  KInfinityScan scan;
  scan.radii = radii;
  for (double r : radii)
    scan.ratios.push_back(area(m, p, r, orders) / volume(m, p, r, orders));
  scan.extrapolated_limit = scan.ratios.back();
  scan.monotone_decreasing = true;
  for (std::size_t i = 1; i < scan.ratios.size(); ++i)
    if (!(scan.ratios[i] < scan.ratios[i - 1])) scan.monotone_decreasing = false;
  scan.domain_limited = std::isfinite(bound);

  const double last = scan.ratios.back();
  if (last < 0.05 && scan.monotone_decreasing) {
    scan.classification = KClass::Vanishing;
  } else if (scan.ratios.size() >= 2 &&
             std::fabs(last - scan.ratios[scan.ratios.size() - 2]) / last < 1e-3) {
    scan.classification = KClass::BoundedNonzero;
  } else {
    scan.classification = KClass::Unbounded;
  }
  return scan;
}

}  // namespace horolab
