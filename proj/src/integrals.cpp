#include "horolab/integrals.hpp"

#include <exception>

#include "horolab/errors.hpp"
#include "horolab/geodesics.hpp"

namespace horolab {

namespace {

// Runs body(k) for k in [0, n) across OpenMP threads. The exception from the
// lowest failing index is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  long first_failure = -1;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(horolab_parallel_for_error)
      if (first_failure < 0 || k < first_failure) {
        first_failure = k;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

void require_radius(const ManifoldModel& m, const Point& p, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  if (r >= injectivity_bound(m, p))
    throw DomainError("radius " + std::to_string(r) + " at or beyond the injectivity bound of " +
                      m.name());
}

}  // namespace

PolarGrid::PolarGrid(const ManifoldModel& m, const Point& p, double r,
                     const QuadratureOrders& orders, bool ball)
    : center_(p), radius_(r), grid_(direction_grid(m.dim(), orders)) {
  require_radius(m, p, r);
  if (ball) {
    RadialRule rule = radial_rule(r, orders.radial);
    radial_nodes_ = std::move(rule.nodes);
    radial_weights_ = std::move(rule.weights);
  } else {
    radial_nodes_ = {r};
    radial_weights_ = {1.0};
  }
  basis_ = orthonormal_basis(m, p);

  const std::size_t nrad = radial_nodes_.size();
  nodes_.resize(grid_.directions.size() * nrad);
  densities_.resize(nodes_.size());

  if (m.is_conformal()) {
    const ConformalFactor& factor = m.factor();
    parallel_for(grid_.directions.size(), [&](std::size_t k) {
      std::vector<geodesics::RadialSample> samples(nrad);
      geodesics::march_radial(factor, p, grid_.directions[k], radial_nodes_,
                              r / geodesics::kDefaultSteps, samples);
      for (std::size_t i = 0; i < nrad; ++i) {
        nodes_[k * nrad + i] = Point{samples[i].position};
        densities_[k * nrad + i] = samples[i].density;
      }
    });
    return;
  }
  parallel_for(grid_.directions.size(), [&](std::size_t k) {
    const TangentVector u = from_basis(basis_, grid_.directions[k]);
    for (std::size_t i = 0; i < nrad; ++i) {
      const double s = radial_nodes_[i];
      nodes_[k * nrad + i] = exp_map(m, p, from_basis(basis_, s * grid_.directions[k]));
      densities_[k * nrad + i] = volume_density(m, p, u, s);
    }
  });
}

PolarGrid PolarGrid::sphere(const ManifoldModel& m, const Point& p, double r,
                            const QuadratureOrders& orders) {
  return PolarGrid(m, p, r, orders, false);
}

PolarGrid PolarGrid::ball(const ManifoldModel& m, const Point& p, double r,
                          const QuadratureOrders& orders) {
  return PolarGrid(m, p, r, orders, true);
}

template <class Reduce>
void PolarGrid::per_direction(std::vector<double>& out, Reduce&& reduce) const {
  out.assign(grid_.directions.size(), 0.0);
  parallel_for(out.size(), [&](std::size_t k) { out[k] = grid_.weights[k] * reduce(k); });
}

double PolarGrid::integrate(const PolarIntegrand& f) const {
  const std::size_t nrad = radial_nodes_.size();
  std::vector<double> partial;
  per_direction(partial, [&](std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nrad; ++i) {
      const PolarSample sample{nodes_[k * nrad + i], grid_.directions[k], radial_nodes_[i]};
      acc += (radial_weights_[i] * densities_[k * nrad + i]) * f(sample);
    }
    return acc;
  });
  return pairwise_sum(partial);
}

double PolarGrid::integrate(const PointFunction& f) const {
  return integrate(PolarIntegrand([&](const PolarSample& s) { return f(s.q); }));
}

Vec PolarGrid::integrate_vector(const PolarVectorIntegrand& f) const {
  const std::size_t nrad = radial_nodes_.size();
  const std::size_t ndir = grid_.directions.size();
  const std::size_t dim = basis_.size();
  std::vector<Vec> partial(ndir);
  parallel_for(ndir, [&](std::size_t k) {
    Vec acc = Vec::zeros(dim);
    for (std::size_t i = 0; i < nrad; ++i) {
      const PolarSample sample{nodes_[k * nrad + i], grid_.directions[k], radial_nodes_[i]};
      const double w = radial_weights_[i] * densities_[k * nrad + i];
      const Vec v = f(sample);
      for (std::size_t c = 0; c < dim; ++c) acc[c] += w * v[c];
    }
    partial[k] = grid_.weights[k] * acc;
  });
  Vec total(dim);
  std::vector<double> column(ndir);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t k = 0; k < ndir; ++k) column[k] = partial[k][c];
    total[c] = pairwise_sum(column);
  }
  return total;
}

Vec PolarGrid::integrate_direction() const {
  return integrate_vector([](const PolarSample& s) { return s.direction; });
}

double sphere_integral_scalar(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                              const QuadratureOrders& orders) {
  return PolarGrid::sphere(m, p, r, orders).integrate(f);
}

TangentVector sphere_integral_vector(const ManifoldModel& m, const Point& p, double r,
                                     const PolarVectorIntegrand& F,
                                     const QuadratureOrders& orders) {
  const PolarGrid grid = PolarGrid::sphere(m, p, r, orders);
  return from_basis(grid.basis(), grid.integrate_vector(F));
}

double ball_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                     const QuadratureOrders& orders) {
  return PolarGrid::ball(m, p, r, orders).integrate(f);
}

double area(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders) {
  return sphere_integral_scalar(m, p, r, [](const Point&) { return 1.0; }, orders);
}

double volume(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders) {
  return ball_integral(m, p, r, [](const Point&) { return 1.0; }, orders);
}

Vec stability_field_coefficients(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders) {
  return PolarGrid::ball(m, p, r, orders).integrate_vector([](const PolarSample& s) {
    return s.radius * s.direction;
  });
}

TangentVector stability_field(const ManifoldModel& m, const Point& p, double r,
                              const QuadratureOrders& orders) {
  return from_basis(orthonormal_basis(m, p), stability_field_coefficients(m, p, r, orders));
}

Vec stability_radial_derivative_coefficients(const ManifoldModel& m, const Point& p, double r,
                                             const QuadratureOrders& orders) {
  // |exp_p^{-1} q| = r on the whole sphere, so the radius factors out.
  return r * PolarGrid::sphere(m, p, r, orders).integrate_direction();
}

TangentVector stability_radial_derivative(const ManifoldModel& m, const Point& p, double r,
                                          const QuadratureOrders& orders) {
  return from_basis(orthonormal_basis(m, p),
                    stability_radial_derivative_coefficients(m, p, r, orders));
}

Vec grad_volume_fd_coefficients(const ManifoldModel& m, const Point& p, double r, double h,
                                const QuadratureOrders& orders) {
  if (!(h > 0.0)) throw ContractViolation("grad_volume_fd: step must be positive");
  const auto basis = orthonormal_basis(m, p);
  Vec grad(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Point plus = exp_map(m, p, {p, h * basis[i].components});
    const Point minus = exp_map(m, p, {p, -h * basis[i].components});
    grad[i] = (volume(m, plus, r, orders) - volume(m, minus, r, orders)) / (2.0 * h);
  }
  return grad;
}

TangentVector grad_volume_fd(const ManifoldModel& m, const Point& p, double r, double h,
                             const QuadratureOrders& orders) {
  return from_basis(orthonormal_basis(m, p), grad_volume_fd_coefficients(m, p, r, h, orders));
}

StabilityReport stability_report(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders) {
  const PolarGrid ball = PolarGrid::ball(m, p, r, orders);
  const PolarGrid sphere = PolarGrid::sphere(m, p, r, orders);
  StabilityReport rep;
  rep.p = p;
  rep.r = r;
  rep.V = ball.integrate(PointFunction([](const Point&) { return 1.0; }));
  rep.A = sphere.integrate(PointFunction([](const Point&) { return 1.0; }));
  rep.H_coefficients =
      ball.integrate_vector([](const PolarSample& s) { return s.radius * s.direction; });
  rep.dH_dr_coefficients = r * sphere.integrate_direction();
  rep.H = from_basis(ball.basis(), rep.H_coefficients);
  rep.dH_dr = from_basis(ball.basis(), rep.dH_dr_coefficients);
  rep.grid_order = orders.direction_order(m.dim());
  rep.radial_order = orders.radial;
  return rep;
}

namespace reference {

namespace {

// Plain nested loops; every node solves its own geodesic problem.
template <class Accumulate>
void for_each_node(const ManifoldModel& m, const Point& p, double r, const QuadratureOrders& orders,
                   bool ball, Accumulate&& accumulate) {
  require_radius(m, p, r);
  const DirectionGrid grid = direction_grid(m.dim(), orders);
  RadialRule rule = ball ? radial_rule(r, orders.radial) : RadialRule{{r}, {1.0}, 1};
  const auto basis = orthonormal_basis(m, p);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = rule.nodes[i];
    for (std::size_t k = 0; k < grid.directions.size(); ++k) {
      const Vec& u = grid.directions[k];
      const Point q = exp_map(m, p, from_basis(basis, s * u));
      const double theta = volume_density(m, p, from_basis(basis, u), s);
      accumulate(rule.weights[i] * grid.weights[k] * theta, q, s, u);
    }
  }
}

}  // namespace

double ball_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                     const QuadratureOrders& orders) {
  double sum = 0.0;
  for_each_node(m, p, r, orders, true,
                [&](double w, const Point& q, double, const Vec&) { sum += w * f(q); });
  return sum;
}

double sphere_integral(const ManifoldModel& m, const Point& p, double r, const PointFunction& f,
                       const QuadratureOrders& orders) {
  double sum = 0.0;
  for_each_node(m, p, r, orders, false,
                [&](double w, const Point& q, double, const Vec&) { sum += w * f(q); });
  return sum;
}

Vec stability_field_coefficients(const ManifoldModel& m, const Point& p, double r,
                                 const QuadratureOrders& orders) {
  Vec sum = Vec::zeros(static_cast<std::size_t>(m.dim()));
  for_each_node(m, p, r, orders, true,
                [&](double w, const Point&, double s, const Vec& u) { sum += (w * s) * u; });
  return sum;
}

}  // namespace reference

}  // namespace horolab
