#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "horolab/conformal.hpp"
#include "horolab/vec.hpp"

namespace horolab {

/// Chart coordinates (Euclidean, conformal surfaces) or ambient coordinates
/// (hyperboloid and sphere, dim + 1 entries).
struct Point {
  Vec coords;
};

struct TangentVector {
  Point base;
  Vec components;
};

struct Euclidean {
  int dim;
};

/// Upper sheet of <x,x>_L = -1 with the Lorentz form -x0 y0 + sum xi yi.
struct Hyperboloid {
  int dim;
};

struct Sphere {
  int dim;
};

struct ConformalSurface {
  std::shared_ptr<const ConformalFactor> factor;
};

/// Immutable description of one Riemannian manifold from the catalog.
class ManifoldModel {
 public:
  using Kind = std::variant<Euclidean, Hyperboloid, Sphere, ConformalSurface>;

  static ManifoldModel euclidean(int dim);
  static ManifoldModel hyperboloid(int dim);
  static ManifoldModel sphere(int dim);
  static ManifoldModel conformal(ConformalFactor factor);

  const Kind& kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  /// Length of Point::coords for this model.
  std::size_t coord_size() const;
  bool ambient() const;

  bool is_conformal() const { return std::holds_alternative<ConformalSurface>(kind_); }
  /// Requires is_conformal().
  const ConformalFactor& factor() const;

  /// Constraint-surface membership (within 1e-10) and, for conformal
  /// surfaces, the chart working domain.
  bool contains(const Point& p) const;

  /// Origin, hyperboloid apex, or sphere north pole.
  Point basepoint() const;

  /// Checked point construction; throws ContractViolation off the manifold.
  Point point(Vec coords) const;

  ManifoldModel with_name(std::string name) const;

 private:
  ManifoldModel(Kind kind, int dim, std::string name)
      : kind_(std::move(kind)), dim_(dim), name_(std::move(name)) {}

  Kind kind_;
  int dim_;
  std::string name_;
};

/// Lorentz form -a0 b0 + sum ai bi.
double lorentz(const Vec& a, const Vec& b);

/// Pull a hyperboloid point back onto <x,x>_L = -1 when drift exceeds 1e-12.
Vec renormalize_hyperboloid(Vec x);

double metric_inner(const ManifoldModel& m, const Point& p, const TangentVector& v,
                    const TangentVector& w);
double metric_norm(const ManifoldModel& m, const TangentVector& v);

Point exp_map(const ManifoldModel& m, const Point& p, const TangentVector& v);
TangentVector log_map(const ManifoldModel& m, const Point& p, const Point& q);
double distance(const ManifoldModel& m, const Point& p, const Point& q);
TangentVector parallel_transport(const ManifoldModel& m, const Point& p, const Point& q,
                                 const TangentVector& v);

/// Polar-coordinate Jacobian: dmu = density dr dOmega along the unit direction u.
double volume_density(const ManifoldModel& m, const Point& p, const TangentVector& u, double r);

/// +infinity except on the sphere (pi).
double injectivity_bound(const ManifoldModel& m, const Point& p);

std::vector<TangentVector> orthonormal_basis(const ManifoldModel& m, const Point& p);

/// Tangent vector sum_i c_i e_i for the orthonormal basis e at p.
TangentVector from_basis(const std::vector<TangentVector>& basis, const Vec& coefficients);
/// Coefficients <v, e_i> of v in an orthonormal basis.
Vec to_basis(const ManifoldModel& m, const std::vector<TangentVector>& basis,
             const TangentVector& v);

}  // namespace horolab
