#include "horolab/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace horolab::catalog {

namespace {

// Offset of the first spatial coordinate: ambient models carry x0 first.
std::size_t spatial(const ManifoldModel& m) { return m.ambient() ? 1 : 0; }

bool is_euclidean(const ManifoldModel& m) { return std::holds_alternative<Euclidean>(m.kind()); }

// Bound on |spatial coordinate| over the working domain.
double coordinate_bound(const ManifoldModel& m) {
  if (std::holds_alternative<Sphere>(m.kind())) return 1.0;
  if (std::holds_alternative<Hyperboloid>(m.kind())) return std::sinh(working_domain_radius(m));
  return working_domain_radius(m);
}

const std::vector<std::string>& all_fields() {
  static const std::vector<std::string> names = {"constant",    "linear-x", "sum-xy",
                                                 "harmonic-saddle", "busemann-exp",
                                                 "square-x",    "gaussian"};
  return names;
}

}  // namespace

std::vector<std::string> manifold_names() {
  return {"euclidean2",   "euclidean3",   "hyperboloid2",  "hyperboloid3", "sphere2",
          "bump-surface", "wave-surface", "poincare-disk", "flat-surface"};
}

ManifoldModel manifold(std::string_view name) {
  if (name == "euclidean2") return ManifoldModel::euclidean(2);
  if (name == "euclidean3") return ManifoldModel::euclidean(3);
  if (name == "hyperboloid2") return ManifoldModel::hyperboloid(2);
  if (name == "hyperboloid3") return ManifoldModel::hyperboloid(3);
  if (name == "sphere2") return ManifoldModel::sphere(2);
  if (name == "bump-surface") return ManifoldModel::conformal(bump_factor());
  if (name == "wave-surface") return ManifoldModel::conformal(wave_factor());
  if (name == "poincare-disk")
    return ManifoldModel::conformal(poincare_factor()).with_name("poincare-disk");
  if (name == "flat-surface") return ManifoldModel::conformal(flat_factor());
  throw std::invalid_argument("unknown manifold '" + std::string(name) + "'");
}

double working_domain_radius(const ManifoldModel& m) {
  if (m.is_conformal()) return m.factor().domain_radius;
  if (std::holds_alternative<Sphere>(m.kind())) return M_PI;
  return 6.0;
}

std::vector<std::string> field_names() { return all_fields(); }

bool field_available(std::string_view name, const ManifoldModel& m) {
  if (name == "busemann-exp") return std::holds_alternative<Hyperboloid>(m.kind());
  if (name == "sum-xy" || name == "harmonic-saddle" || name == "gaussian") return m.dim() >= 2;
  for (const auto& n : all_fields())
    if (n == name) return true;
  return false;
}

ScalarField field(std::string_view name, const ManifoldModel& m) {
  if (!field_available(name, m))
    throw std::invalid_argument("field '" + std::string(name) + "' is not available on " +
                                m.name());
  const std::size_t o = spatial(m);
  const double c = coordinate_bound(m);
  ScalarField u;
  u.name = std::string(name);

  if (name == "constant") {
    u.evaluate = [](const Point&) { return 1.0; };
    u.directional_derivative = [](const Point&, const TangentVector&) { return 0.0; };
    u.sup_bound = 1.0;
    u.claims_mvp = true;
  } else if (name == "linear-x") {
    u.evaluate = [o](const Point& p) { return p.coords[o]; };
    u.directional_derivative = [o](const Point&, const TangentVector& X) {
      return X.components[o];
    };
    u.sup_bound = c;
    u.claims_mvp = is_euclidean(m);
  } else if (name == "sum-xy") {
    u.evaluate = [o](const Point& p) { return p.coords[o] + p.coords[o + 1]; };
    u.directional_derivative = [o](const Point&, const TangentVector& X) {
      return X.components[o] + X.components[o + 1];
    };
    u.sup_bound = c * std::sqrt(2.0);
    u.claims_mvp = is_euclidean(m);
  } else if (name == "harmonic-saddle") {
    u.evaluate = [o](const Point& p) {
      return p.coords[o] * p.coords[o] - p.coords[o + 1] * p.coords[o + 1];
    };
    u.directional_derivative = [o](const Point& p, const TangentVector& X) {
      return 2.0 * p.coords[o] * X.components[o] - 2.0 * p.coords[o + 1] * X.components[o + 1];
    };
    u.sup_bound = c * c;
    u.claims_mvp = is_euclidean(m);
  } else if (name == "busemann-exp") {
    // exp(-(n-1) b) for the Busemann function of the null direction (1, 1, 0, ...),
    // normalized to 1 at the apex: u = (x0 - x1)^-(n-1).
    const double k = m.dim() - 1;
    u.evaluate = [k](const Point& p) { return std::pow(p.coords[0] - p.coords[1], -k); };
    u.directional_derivative = [k](const Point& p, const TangentVector& X) {
      const double w = p.coords[0] - p.coords[1];
      return -k * std::pow(w, -k - 1.0) * (X.components[0] - X.components[1]);
    };
    u.sup_bound = std::exp(k * working_domain_radius(m));
    u.claims_mvp = true;
  } else if (name == "square-x") {
    u.evaluate = [o](const Point& p) { return p.coords[o] * p.coords[o]; };
    u.directional_derivative = [o](const Point& p, const TangentVector& X) {
      return 2.0 * p.coords[o] * X.components[o];
    };
    u.sup_bound = c * c;
  } else if (name == "gaussian") {
    u.evaluate = [o](const Point& p) {
      const double x = p.coords[o], y = p.coords[o + 1];
      return std::exp(-(x * x + y * y) / 4.0);
    };
    u.directional_derivative = [o](const Point& p, const TangentVector& X) {
      const double x = p.coords[o], y = p.coords[o + 1];
      return -0.5 * (x * X.components[o] + y * X.components[o + 1]) *
             std::exp(-(x * x + y * y) / 4.0);
    };
    u.sup_bound = 1.0;
  }
  return u;
}

std::vector<std::string> suite_names() {
  return {"lemma21",       "moving-ball", "prop31",    "constant-identity",
          "gradient-bound", "hnorm-bound", "kinfty",    "mvp-check"};
}

}  // namespace horolab::catalog
