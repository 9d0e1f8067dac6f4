#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horolab/integrals.hpp"
#include "horolab/manifold.hpp"

namespace horolab {

/// A named test function u on one manifold.
struct ScalarField {
  std::string name;
  std::function<double(const Point&)> evaluate;
  /// alpha with |u| <= alpha on the working domain.
  std::optional<double> sup_bound;
  /// X u (p); empty means "use central differences along the geodesic".
  std::function<double(const Point&, const TangentVector&)> directional_derivative;
  bool claims_mvp = false;
};

enum class Identity { Lemma21, MovingBall, Prop31, GradientBound, HNormBound, MVP, ConstantFieldIdentity };

std::string_view identity_name(Identity id);

struct ReportContext {
  std::string manifold;
  Vec point;
  double radius = 0.0;
  /// Basis coefficients of X; empty when the identity has no direction.
  Vec direction;
  std::string field;
};

struct IdentityReport {
  Identity identity;
  Vec lhs;
  Vec rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  ReportContext context;
};

/// abs = |lhs - rhs|, rel = abs / max(|lhs|, |rhs|, scale_floor).
IdentityReport equality_report(Identity id, Vec lhs, Vec rhs, double tolerance,
                               ReportContext context, double scale_floor = 1e-12);
/// Inequality lhs <= rhs: abs is the violation max(0, lhs - rhs).
IdentityReport bound_report(Identity id, double lhs, double rhs, double tolerance,
                            ReportContext context);

enum class KClass { Vanishing, BoundedNonzero, Unbounded };
std::string_view kclass_name(KClass k);

struct KInfinityScan {
  std::vector<double> radii;
  std::vector<double> ratios;
  double extrapolated_limit = 0.0;
  KClass classification = KClass::Unbounded;
  bool monotone_decreasing = false;
  /// The model has a finite injectivity bound, so r cannot go to infinity.
  bool domain_limited = false;
};

inline constexpr double kLemma21Tolerance = 1e-3;
inline constexpr double kMovingBallTolerance = 1e-3;
inline constexpr double kProp31Tolerance = 1e-4;
inline constexpr double kConstantIdentityTolerance = 1e-12;
inline constexpr double kGradientBoundSlack = 1e-9;
inline constexpr double kHNormSlack = 1e-10;
inline constexpr double kMvpTolerance = 1e-6;
inline constexpr double kMovingBallStep = 1e-3;
inline constexpr double kMovingBallScaleFloor = 1e-6;
inline constexpr double kDirectionalStep = 1e-5;

/// cos of the angle at p between X and the geodesic direction towards q.
double cos_angle(const ManifoldModel& m, const Point& p, const TangentVector& X, const Point& q);

double mean_value(const ManifoldModel& m, const ScalarField& u, const Point& p, double r,
                  const QuadratureOrders& orders = {});

/// X u (p), analytic when available, else central differences along exp_p(tX).
double directional_derivative(const ManifoldModel& m, const ScalarField& u, const Point& p,
                              const TangentVector& X);

IdentityReport lemma21_residual(const ManifoldModel& m, const Point& p, double r,
                                const QuadratureOrders& orders = {});

IdentityReport moving_ball_derivative_check(const ManifoldModel& m, const ScalarField& u,
                                            const Point& p, const TangentVector& X, double r,
                                            const QuadratureOrders& orders = {});

IdentityReport prop31_residual(const ManifoldModel& m, const ScalarField& u, const Point& p,
                               const TangentVector& X, double r,
                               const QuadratureOrders& orders = {});

IdentityReport constant_field_identity(const ManifoldModel& m, const Point& p,
                                       const TangentVector& X, double r,
                                       const QuadratureOrders& orders = {});

/// One report per orthonormal basis vector X at p.
std::vector<IdentityReport> gradient_bound_check(const ManifoldModel& m, const ScalarField& u,
                                                 const Point& p, double r,
                                                 const QuadratureOrders& orders = {});

IdentityReport hnorm_bound_check(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders = {});

/// |mean_value - u(p)| <= 1e-6 max(1, |u(p)|).
IdentityReport mvp_check(const ManifoldModel& m, const ScalarField& u, const Point& p, double r,
                         const QuadratureOrders& orders = {});

KInfinityScan kinfinity_scan(const ManifoldModel& m, const Point& p, const std::vector<double>& radii,
                             const QuadratureOrders& orders = {});

}  // namespace horolab
