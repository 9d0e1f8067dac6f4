#include "horolab/manifold.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "horolab/errors.hpp"
#include "horolab/geodesics.hpp"

namespace horolab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kConstraintTol = 1e-10;
constexpr double kRenormalizeTol = 1e-12;

void require_base(const Point& p, const TangentVector& v) {
  if (v.base.coords.size() != p.coords.size() || v.components.size() != p.coords.size())
    throw ContractViolation("tangent vector has wrong length for base point");
  double scale = 1.0;
  for (double c : p.coords) scale = std::fmax(scale, std::fabs(c));
  if (max_abs_diff(v.base.coords, p.coords) > 1e-12 * scale)
    throw ContractViolation("tangent vector is not based at the given point");
}

// sinh(x)/x and sin(x)/x without cancellation near zero.
double sinhc(double x) { return std::fabs(x) < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x; }
double sinc(double x) { return std::fabs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

Vec normalized(Vec x) { return x * (1.0 / norm(x)); }

}  // namespace

ManifoldModel ManifoldModel::euclidean(int dim) {
  if (dim < 1) throw ContractViolation("dimension must be positive");
  return ManifoldModel(Euclidean{dim}, dim, "euclidean" + std::to_string(dim));
}

ManifoldModel ManifoldModel::hyperboloid(int dim) {
  if (dim < 1 || dim > 3) throw ContractViolation("hyperboloid dimension must be in [1, 3]");
  return ManifoldModel(Hyperboloid{dim}, dim, "hyperboloid" + std::to_string(dim));
}

ManifoldModel ManifoldModel::sphere(int dim) {
  if (dim < 1 || dim > 3) throw ContractViolation("sphere dimension must be in [1, 3]");
  return ManifoldModel(Sphere{dim}, dim, "sphere" + std::to_string(dim));
}

ManifoldModel ManifoldModel::conformal(ConformalFactor factor) {
  std::string name = factor.name + "-surface";
  return ManifoldModel(ConformalSurface{std::make_shared<const ConformalFactor>(std::move(factor))},
                       2, std::move(name));
}

ManifoldModel ManifoldModel::with_name(std::string name) const {
  ManifoldModel m = *this;
  m.name_ = std::move(name);
  return m;
}

std::size_t ManifoldModel::coord_size() const {
  return static_cast<std::size_t>(ambient() ? dim_ + 1 : dim_);
}

bool ManifoldModel::ambient() const {
  return std::holds_alternative<Hyperboloid>(kind_) || std::holds_alternative<Sphere>(kind_);
}

const ConformalFactor& ManifoldModel::factor() const {
  return *std::get<ConformalSurface>(kind_).factor;
}

bool ManifoldModel::contains(const Point& p) const {
  const Vec& x = p.coords;
  if (x.size() != coord_size()) return false;
  for (double c : x)
    if (!std::isfinite(c)) return false;
  return std::visit(
      overloaded{
          [](const Euclidean&) { return true; },
          [&](const Hyperboloid&) {
            // Absolute roundoff in <x,x>_L grows with x0^2.
            return x[0] > 0.0 &&
                   std::fabs(lorentz(x, x) + 1.0) <= kConstraintTol * std::fmax(1.0, x[0] * x[0]);
          },
          [&](const Sphere&) { return std::fabs(norm(x) - 1.0) <= kConstraintTol; },
          [&](const ConformalSurface& s) {
            const double rho = norm(x);
            return s.factor->domain_radius <= 1.0 ? rho < s.factor->domain_radius
                                                  : rho <= s.factor->domain_radius;
          },
      },
      kind_);
}

Point ManifoldModel::basepoint() const {
  Vec x(coord_size());
  if (std::holds_alternative<Hyperboloid>(kind_)) x[0] = 1.0;
  if (std::holds_alternative<Sphere>(kind_)) x[coord_size() - 1] = 1.0;
  return Point{x};
}

Point ManifoldModel::point(Vec coords) const {
  Point p{coords};
  if (!contains(p)) throw ContractViolation("point is not on manifold " + name_);
  return p;
}

double lorentz(const Vec& a, const Vec& b) {
  double s = -a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec renormalize_hyperboloid(Vec x) {
  if (std::fabs(lorentz(x, x) + 1.0) > kRenormalizeTol) {
    double s = 1.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
    x[0] = std::sqrt(s);
  }
  return x;
}

double metric_inner(const ManifoldModel& m, const Point& p, const TangentVector& v,
                    const TangentVector& w) {
  require_base(p, v);
  require_base(p, w);
  return std::visit(
      overloaded{
          [&](const Hyperboloid&) { return lorentz(v.components, w.components); },
          [&](const ConformalSurface& s) {
            const double l = s.factor->value(p.coords[0], p.coords[1]);
            return std::exp(2.0 * l) * dot(v.components, w.components);
          },
          [&](const auto&) { return dot(v.components, w.components); },
      },
      m.kind());
}

double metric_norm(const ManifoldModel& m, const TangentVector& v) {
  return std::sqrt(std::fmax(metric_inner(m, v.base, v, v), 0.0));
}

Point exp_map(const ManifoldModel& m, const Point& p, const TangentVector& v) {
  require_base(p, v);
  return std::visit(
      overloaded{
          [&](const Euclidean&) { return Point{p.coords + v.components}; },
          [&](const Hyperboloid&) {
            const double n = std::sqrt(std::fmax(lorentz(v.components, v.components), 0.0));
            if (n == 0.0) return p;
            return Point{renormalize_hyperboloid(std::cosh(n) * p.coords +
                                                 sinhc(n) * v.components)};
          },
          [&](const Sphere&) {
            const double n = norm(v.components);
            if (n == 0.0) return p;
            return Point{normalized(std::cos(n) * p.coords + sinc(n) * v.components)};
          },
          [&](const ConformalSurface& s) {
            return geodesics::geodesic_endpoint(*s.factor, p, v.components);
          },
      },
      m.kind());
}

TangentVector log_map(const ManifoldModel& m, const Point& p, const Point& q) {
  return std::visit(
      overloaded{
          [&](const Euclidean&) { return TangentVector{p, q.coords - p.coords}; },
          [&](const Hyperboloid&) {
            const double a = -lorentz(p.coords, q.coords);
            const Vec u = q.coords - a * p.coords;
            const double nu = std::sqrt(std::fmax(lorentz(u, u), 0.0));
            if (nu == 0.0) return TangentVector{p, Vec::zeros(p.coords.size())};
            return TangentVector{p, (std::asinh(nu) / nu) * u};
          },
          [&](const Sphere&) {
            const double c = dot(p.coords, q.coords);
            const Vec u = q.coords - c * p.coords;
            const double nu = norm(u);
            const double d = std::atan2(nu, c);
            if (d > std::numbers::pi - 1e-10)
              throw DomainError("log_map: point at the antipodal cut locus");
            if (nu == 0.0) return TangentVector{p, Vec::zeros(p.coords.size())};
            return TangentVector{p, (d / nu) * u};
          },
          [&](const ConformalSurface& s) {
            return geodesics::shoot_log(*s.factor, p, q).velocity;
          },
      },
      m.kind());
}

double distance(const ManifoldModel& m, const Point& p, const Point& q) {
  return metric_norm(m, log_map(m, p, q));
}

TangentVector parallel_transport(const ManifoldModel& m, const Point& p, const Point& q,
                                 const TangentVector& v) {
  require_base(p, v);
  return std::visit(
      overloaded{
          [&](const Euclidean&) { return TangentVector{q, v.components}; },
          [&](const Hyperboloid&) {
            const double c = lorentz(q.coords, v.components) / (1.0 - lorentz(p.coords, q.coords));
            return TangentVector{q, v.components + c * (p.coords + q.coords)};
          },
          [&](const Sphere&) {
            const double denom = 1.0 + dot(p.coords, q.coords);
            if (denom < 1e-14) throw DomainError("parallel_transport: antipodal endpoints");
            const double c = dot(q.coords, v.components) / denom;
            return TangentVector{q, v.components - c * (p.coords + q.coords)};
          },
          [&](const ConformalSurface& s) {
            const TangentVector lg = geodesics::shoot_log(*s.factor, p, q).velocity;
            double step = 1.0 / geodesics::kDefaultSteps;
            for (int k = 0;; ++k) {
              try {
                auto path = geodesics::integrate_geodesic(*s.factor, p, lg.components, 1.0, step);
                return geodesics::transport_along(*s.factor, path, v.components);
              } catch (const AccuracyError&) {
                if (k == geodesics::kMaxHalvings) throw;
                step *= 0.5;
              }
            }
          },
      },
      m.kind());
}

double volume_density(const ManifoldModel& m, const Point& p, const TangentVector& u, double r) {
  if (!(r >= 0.0)) throw DomainError("volume_density: negative radius");
  if (r >= injectivity_bound(m, p))
    throw DomainError("volume_density: radius at or beyond the injectivity bound");
  const double n1 = m.dim() - 1;
  return std::visit(
      overloaded{
          [&](const Euclidean&) { return std::pow(r, n1); },
          [&](const Hyperboloid&) { return std::pow(std::sinh(r), n1); },
          [&](const Sphere&) { return std::pow(std::sin(r), n1); },
          [&](const ConformalSurface& s) {
            require_base(p, u);
            const double phi = std::atan2(u.components[1], u.components[0]);
            return geodesics::jacobi_density(*s.factor, p, phi, r);
          },
      },
      m.kind());
}

double injectivity_bound(const ManifoldModel& m, const Point&) {
  return std::holds_alternative<Sphere>(m.kind()) ? std::numbers::pi
                                                  : std::numeric_limits<double>::infinity();
}

std::vector<TangentVector> orthonormal_basis(const ManifoldModel& m, const Point& p) {
  const std::size_t n = static_cast<std::size_t>(m.dim());
  const std::size_t len = m.coord_size();
  std::vector<TangentVector> basis;
  basis.reserve(n);

  if (const auto* s = std::get_if<ConformalSurface>(&m.kind())) {
    const double scale = std::exp(-s->factor->value(p.coords[0], p.coords[1]));
    for (std::size_t i = 0; i < n; ++i) basis.push_back({p, scale * Vec::unit(len, i)});
    return basis;
  }
  if (std::holds_alternative<Euclidean>(m.kind())) {
    for (std::size_t i = 0; i < n; ++i) basis.push_back({p, Vec::unit(len, i)});
    return basis;
  }

  const bool hyper = std::holds_alternative<Hyperboloid>(m.kind());
  auto inner = [&](const Vec& a, const Vec& b) { return hyper ? lorentz(a, b) : dot(a, b); };
  // Project ambient axes onto T_pM. On the sphere drop the axis most aligned
  // with p; on the hyperboloid drop the timelike axis.
  std::size_t skip = 0;
  if (!hyper) {
    for (std::size_t k = 1; k < len; ++k)
      if (std::fabs(p.coords[k]) > std::fabs(p.coords[skip])) skip = k;
  }
  for (std::size_t k = 0; k < len; ++k) {
    if (k == skip) continue;
    Vec v = Vec::unit(len, k);
    // <p,p> = -1 on the hyperboloid, +1 on the sphere.
    v = hyper ? v + lorentz(v, p.coords) * p.coords : v - dot(v, p.coords) * p.coords;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) v = v - inner(v, e.components) * e.components;
      if (hyper) v = v + lorentz(v, p.coords) * p.coords;
      else v = v - dot(v, p.coords) * p.coords;
    }
    basis.push_back({p, v * (1.0 / std::sqrt(inner(v, v)))});
  }
  return basis;
}

TangentVector from_basis(const std::vector<TangentVector>& basis, const Vec& coefficients) {
  TangentVector v{basis.front().base, Vec::zeros(basis.front().components.size())};
  for (std::size_t i = 0; i < basis.size(); ++i) v.components += coefficients[i] * basis[i].components;
  return v;
}

Vec to_basis(const ManifoldModel& m, const std::vector<TangentVector>& basis,
             const TangentVector& v) {
  Vec c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = metric_inner(m, v.base, v, basis[i]);
  return c;
}

}  // namespace horolab
