#pragma once

#include <functional>
#include <vector>

#include "horolab/manifold.hpp"
#include "horolab/quadrature.hpp"

namespace horolab {

/// One quadrature node q = exp_p(radius * direction). In polar coordinates
/// exp_p^{-1}(q) = radius * direction, with direction given as coefficients
/// in the orthonormal basis at p.
struct PolarSample {
  const Point& q;
  const Vec& direction;
  double radius;
};

using PointFunction = std::function<double(const Point&)>;
using PolarIntegrand = std::function<double(const PolarSample&)>;
using PolarVectorIntegrand = std::function<Vec(const PolarSample&)>;

/// Precomputed nodes of a geodesic sphere S(p,r) or ball B(p,r): positions
/// and volume densities for every (direction, radius) pair. Node geometry is
/// evaluated in parallel over directions; every integral reduces per
/// direction in radial order, then pairwise over directions, so results do
/// not depend on the thread count.
class PolarGrid {
 public:
  static PolarGrid sphere(const ManifoldModel& m, const Point& p, double r,
                          const QuadratureOrders& orders = {});
  static PolarGrid ball(const ManifoldModel& m, const Point& p, double r,
                        const QuadratureOrders& orders = {});

  double integrate(const PolarIntegrand& f) const;
  double integrate(const PointFunction& f) const;
  /// Componentwise integral of a field valued in T_pM (basis coefficients).
  Vec integrate_vector(const PolarVectorIntegrand& f) const;
  /// Integral of the unit radial direction; exp_p^{-1} on S(p,r) is r times this.
  Vec integrate_direction() const;

  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  const DirectionGrid& directions() const { return grid_; }
  const std::vector<double>& radial_nodes() const { return radial_nodes_; }
  const std::vector<TangentVector>& basis() const { return basis_; }
  const Point& node(std::size_t dir, std::size_t rad) const { return nodes_[dir * radial_nodes_.size() + rad]; }
  double density(std::size_t dir, std::size_t rad) const {
    return densities_[dir * radial_nodes_.size() + rad];
  }

 private:
  PolarGrid(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders,
            bool ball);

  template <class Reduce>
  void per_direction(std::vector<double>& out, Reduce&& reduce) const;

  Point center_;
  double radius_;
  DirectionGrid grid_;
  std::vector<double> radial_nodes_;
  std::vector<double> radial_weights_;
  std::vector<TangentVector> basis_;
  std::vector<Point> nodes_;
  std::vector<double> densities_;
};

/// Geometric quantities of one geodesic ball.
struct StabilityReport {
  Point p;
  double r = 0.0;
  double V = 0.0;
  double A = 0.0;
  TangentVector H;
  TangentVector dH_dr;
  Vec H_coefficients;
  Vec dH_dr_coefficients;
  int grid_order = 0;
  int radial_order = 0;
};

double sphere_integral_scalar(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                              const QuadratureOrders& orders = {});
TangentVector sphere_integral_vector(const ManifoldModel& m, const Point& p, double r,
                                     const PolarVectorIntegrand& F,
                                     const QuadratureOrders& orders = {});
double ball_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                     const QuadratureOrders& orders = {});

double area(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders = {});
double volume(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders = {});

/// H(p,r) = integral over B(p,r) of exp_p^{-1}(q), as basis coefficients.
Vec stability_field_coefficients(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders = {});
TangentVector stability_field(const ManifoldModel& m, const Point& p, double r,
                              const QuadratureOrders& orders = {});

/// dH/dr(p,r) = integral over S(p,r) of exp_p^{-1}(q), as basis coefficients.
Vec stability_radial_derivative_coefficients(const ManifoldModel& m, const Point& p, double r,
                                             const QuadratureOrders& orders = {});
TangentVector stability_radial_derivative(const ManifoldModel& m, const Point& p, double r,
                                          const QuadratureOrders& orders = {});

inline constexpr double kGradVolumeStep = 1e-3;

/// Central differences of V along exp_p(+-h e_i), as basis coefficients.
Vec grad_volume_fd_coefficients(const ManifoldModel& m, const Point& p, double r,
                                double h = kGradVolumeStep, const QuadratureOrders& orders = {});
TangentVector grad_volume_fd(const ManifoldModel& m, const Point& p, double r,
                             double h = kGradVolumeStep, const QuadratureOrders& orders = {});

StabilityReport stability_report(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders = {});

/// Serial, node-by-node implementations without the shared radial march or
/// pairwise reduction. Kept as a reference for testing and benchmarking the
/// parallel kernels.
namespace reference {

double ball_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                     const QuadratureOrders& orders = {});
double sphere_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                       const QuadratureOrders& orders = {});
Vec stability_field_coefficients(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders = {});

}  // namespace reference

}  // namespace horolab
