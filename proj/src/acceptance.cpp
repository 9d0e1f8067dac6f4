#include "horolab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "horolab/catalog.hpp"
#include "horolab/errors.hpp"
#include "horolab/geodesics.hpp"
#include "horolab/identities.hpp"
#include "horolab/integrals.hpp"
#include "horolab/poincare.hpp"

namespace horolab::acceptance {

namespace {

using cli::format_number;
using cli::format_vec;

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }
  void report(std::string_view suite, const IdentityReport& rep) {
    r_.rows.push_back(cli::row_from_report(suite, rep));
    expect(rep.passed, std::string(suite) + " on " + rep.context.manifold + " at " +
                           format_vec(rep.context.point) + " r=" + format_number(rep.context.radius) +
                           " rel=" + format_number(rep.rel_residual));
  }
  /// |value - expected| <= tol * scale, recorded as a CSV row too.
  void close(std::string_view suite, const std::string& manifold, const Point& p, double r,
             const std::string& what, double value, double expected, double tol, double scale) {
    const double err = std::fabs(value - expected);
    const bool ok = err <= tol * scale;
    r_.rows.push_back({std::string(suite), manifold, format_vec(p.coords), format_number(r), "-",
                       what, format_number(value), format_number(expected), format_number(err),
                       format_number(err / scale), format_number(tol), ok});
    expect(ok, std::string(suite) + " " + what + " on " + manifold + " r=" + format_number(r) +
                   ": got " + format_number(value) + ", expected " + format_number(expected));
  }
  void error(const std::string& where, const std::exception& e) {
    expect(false, where + ": " + e.what());
  }

 private:
  CriterionResult& r_;
};

ManifoldModel named(std::string_view name) { return catalog::manifold(name); }

Point displaced(const ManifoldModel& m, Vec coefficients) {
  const Point base = m.basepoint();
  return exp_map(m, base, from_basis(orthonormal_basis(m, base), coefficients));
}

// 1. Closed-form V and A on R^2, H^2, S^2.
void closed_form_geometry(Recorder& rec) {
  struct Case {
    const char* name;
    double (*V)(double);
    double (*A)(double);
  };
  const Case cases[] = {
      {"euclidean2", [](double r) { return kPi * r * r; }, [](double r) { return 2 * kPi * r; }},
      {"hyperboloid2", [](double r) { return 2 * kPi * (std::cosh(r) - 1); },
       [](double r) { return 2 * kPi * std::sinh(r); }},
      {"sphere2", [](double r) { return 2 * kPi * (1 - std::cos(r)); },
       [](double r) { return 2 * kPi * std::sin(r); }},
  };
  for (const Case& c : cases) {
    const ManifoldModel m = named(c.name);
    for (const Point& p : standard_basepoints(m))
      for (double r : kStandardRadii) {
        const double V = volume(m, p, r), A = area(m, p, r);
        rec.close("closed-form", m.name(), p, r, "V", V, c.V(r), 1e-8, c.V(r));
        rec.close("closed-form", m.name(), p, r, "A", A, c.A(r), 1e-8, c.A(r));
      }
  }
}

// 2. Poincare-disk numerics against hyperboloid closed forms.
void pipeline_cross_validation(Recorder& rec) {
  const ManifoldModel disk = named("poincare-disk");
  const ManifoldModel h2 = named("hyperboloid2");
  const ConformalFactor& lambda = disk.factor();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double rho = 0.4 * unit(rng), ang = 2 * kPi * unit(rng);
    const Point p{Vec{rho * std::cos(ang), rho * std::sin(ang)}};
    const Point P = poincare::to_hyperboloid(p);
    const double psi = 2 * kPi * unit(rng), d = 0.2 + 2.8 * unit(rng);
    const Point Q = exp_map(h2, P, from_basis(orthonormal_basis(h2, P), Vec{d * std::cos(psi), d * std::sin(psi)}));
    const Point q = poincare::to_disk(Q);
    const std::string tag = "config " + std::to_string(i);
    try {
      const TangentVector v = log_map(disk, p, q);
      const double dist = metric_norm(disk, v);
      rec.close("cross-validation", disk.name(), p, d, tag + " distance", dist,
                distance(h2, P, Q), 1e-6, 1.0);
      const TangentVector pushed = poincare::push_forward(p, v.components);
      const TangentVector exact = log_map(h2, P, Q);
      rec.close("cross-validation", disk.name(), p, d, tag + " log", max_abs_diff(pushed.components, exact.components),
                0.0, 1e-6, 1.0);
      const double phi = std::atan2(v.components[1], v.components[0]);
      rec.close("cross-validation", disk.name(), p, d, tag + " density",
                geodesics::jacobi_density(lambda, p, phi, d), std::sinh(d), 1e-6, std::sinh(d));
    } catch (const Error& e) {
      rec.error(tag, e);
    }
  }
}

// 3. Gradient of volume against the sphere integral of exp^{-1}.
void lemma21(Recorder& rec) {
  for (const char* name : {"bump-surface", "wave-surface"}) {
    const ManifoldModel m = named(name);
    const std::vector<Point> points = std::string(name) == "bump-surface"
        ? std::vector<Point>{Point{Vec{1.5, 0.0}}, Point{Vec{0.5, 0.5}}, Point{Vec{-1.0, 0.8}}}
        : std::vector<Point>{Point{Vec{0.5, 0.3}}, Point{Vec{1.2, -0.7}}, Point{Vec{-0.4, 1.1}}};
    double largest = 0.0;
    for (const Point& p : points)
      for (double r : {0.3, 0.6, 1.0}) {
        try {
          const IdentityReport rep = lemma21_residual(m, p, r);
          rec.report("lemma21", rep);
          largest = std::fmax(largest, norm(rep.rhs));
        } catch (const Error& e) {
          rec.error(std::string(name) + " lemma21", e);
        }
      }
    rec.expect(largest > 1e-6, std::string(name) + ": both sides vanish everywhere");
  }
}

// 4. Moving-ball derivative for fields without the mean-value property.
void moving_ball(Recorder& rec) {
  struct Case {
    const char* manifold;
    const char* field;
    Vec offset;  // basis coefficients of the basepoint displacement
    std::size_t axis;
    double r;
  };
  const Case cases[] = {
      {"euclidean2", "square-x", Vec{0.3, -0.2}, 0, 1.0},
      {"euclidean3", "gaussian", Vec{0.2, 0.1, -0.3}, 2, 0.8},
      {"hyperboloid2", "square-x", Vec{0.4, 0.2}, 1, 1.0},
      {"hyperboloid3", "gaussian", Vec{0.3, -0.2, 0.1}, 0, 0.7},
      {"sphere2", "square-x", Vec{0.5, -0.3}, 0, 1.2},
      {"bump-surface", "sum-xy", Vec{0.5, 0.5}, 0, 0.8},
      {"bump-surface", "gaussian", Vec{1.0, -0.4}, 1, 1.0},
      {"wave-surface", "square-x", Vec{0.5, 0.3}, 1, 1.0},
      {"poincare-disk", "gaussian", Vec{0.1, 0.2}, 0, 0.8},
  };
  for (const Case& c : cases) {
    const ManifoldModel m = named(c.manifold);
    const Point p = m.is_conformal() ? Point{c.offset} : displaced(m, c.offset);
    try {
      const auto basis = orthonormal_basis(m, p);
      rec.report("moving-ball",
                 moving_ball_derivative_check(m, catalog::field(c.field, m), p, basis[c.axis], c.r));
    } catch (const Error& e) {
      rec.error(std::string(c.manifold) + " moving-ball", e);
    }
  }
  // Analytic case: u = x, p = 0, X = e1, r = 1 gives pi on both sides.
  const ManifoldModel e2 = named("euclidean2");
  const Point origin = e2.basepoint();
  const IdentityReport rep = moving_ball_derivative_check(
      e2, catalog::field("linear-x", e2), origin, orthonormal_basis(e2, origin)[0], 1.0);
  rec.report("moving-ball", rep);
  rec.close("moving-ball", e2.name(), origin, 1.0, "analytic lhs", rep.lhs[0], kPi, 1e-10, 1.0);
  rec.close("moving-ball", e2.name(), origin, 1.0, "analytic rhs", rep.rhs[0], kPi, 1e-10, 1.0);
}

// 5. Derivative formula for mean-value fields.
void prop31(Recorder& rec) {
  const ManifoldModel e2 = named("euclidean2");
  const Point p{Vec{0.7, -1.2}};
  const ScalarField x = catalog::field("linear-x", e2);
  for (double r : kStandardRadii) {
    const IdentityReport rep = prop31_residual(e2, x, p, orthonormal_basis(e2, p)[0], r);
    rec.report("prop31", rep);
    rec.close("prop31", e2.name(), p, r, "linear-x lhs", rep.lhs[0], 1.0, 1e-8, 1.0);
    rec.close("prop31", e2.name(), p, r, "linear-x rhs", rep.rhs[0], 1.0, 1e-8, 1.0);
  }
  const ManifoldModel h2 = named("hyperboloid2");
  const Point apex = h2.basepoint();
  const ScalarField b = catalog::field("busemann-exp", h2);
  const struct {
    TangentVector X;
    double expected;
  } dirs[] = {{{apex, Vec{0, 1, 0}}, 1.0}, {{apex, Vec{0, 0, 1}}, 0.0}};
  for (const auto& d : dirs)
    for (double r : kStandardRadii) {
      const IdentityReport rep = prop31_residual(h2, b, apex, d.X, r);
      rec.report("prop31", rep);
      rec.close("prop31", h2.name(), apex, r, "busemann-exp lhs", rep.lhs[0], d.expected, 1e-12, 1.0);
      rec.close("prop31", h2.name(), apex, r, "busemann-exp rhs", rep.rhs[0], d.expected, 1e-4, 1.0);
    }
}

// 6 and 7 share the catalog sweep.
template <class Body>
void for_each_configuration(Recorder& rec, Body&& body) {
  for (const auto& name : catalog::manifold_names()) {
    const ManifoldModel m = named(name);
    for (const Point& p : standard_basepoints(m))
      for (double r : kStandardRadii) {
        try {
          body(m, p, r);
        } catch (const Error& e) {
          rec.error(name + " r=" + format_number(r), e);
        }
      }
  }
}

void constant_identity(Recorder& rec) {
  for_each_configuration(rec, [&](const ManifoldModel& m, const Point& p, double r) {
    for (const TangentVector& X : orthonormal_basis(m, p))
      rec.report("constant-identity", constant_field_identity(m, p, X, r));
  });
}

void proof_bounds(Recorder& rec) {
  for_each_configuration(rec, [&](const ManifoldModel& m, const Point& p, double r) {
    rec.report("hnorm-bound", hnorm_bound_check(m, p, r));
    for (const auto& name : catalog::field_names()) {
      if (!catalog::field_available(name, m)) continue;
      const ScalarField u = catalog::field(name, m);
      if (!u.claims_mvp) continue;
      for (const auto& rep : gradient_bound_check(m, u, p, r)) rec.report("gradient-bound", rep);
    }
  });
  const ManifoldModel h2 = named("hyperboloid2");
  rec.report("hnorm-bound", hnorm_bound_check(h2, h2.basepoint(), 10.0));
}

// 8. Area-to-volume ratio at growing radii.
void kinfinity(Recorder& rec) {
  const ManifoldModel e2 = named("euclidean2");
  const std::vector<double> flat_radii = {10, 25, 50, 100};
  const KInfinityScan flat = kinfinity_scan(e2, e2.basepoint(), flat_radii);
  for (std::size_t i = 0; i < flat_radii.size(); ++i)
    rec.close("kinfty", e2.name(), e2.basepoint(), flat_radii[i], "A/V", flat.ratios[i],
              2.0 / flat_radii[i], 1e-8, 1.0);
  rec.expect(flat.classification == KClass::Vanishing,
             "euclidean2 classified " + std::string(kclass_name(flat.classification)));

  const ManifoldModel h2 = named("hyperboloid2");
  const std::vector<double> hyp_radii = {2, 5, 8, 10};
  const KInfinityScan hyp = kinfinity_scan(h2, h2.basepoint(), hyp_radii);
  for (std::size_t i = 0; i < hyp_radii.size(); ++i)
    rec.close("kinfty", h2.name(), h2.basepoint(), hyp_radii[i], "A/V", hyp.ratios[i],
              1.0 / std::tanh(hyp_radii[i] / 2.0), 1e-3, 1.0);
  rec.expect(hyp.classification == KClass::BoundedNonzero,
             "hyperboloid2 classified " + std::string(kclass_name(hyp.classification)));
  rec.close("kinfty", h2.name(), h2.basepoint(), hyp_radii.back(), "limit", hyp.extrapolated_limit,
            1.0, 1e-3, 1.0);
}

// 9. Mean-value certification, including a field that must fail.
void mvp(Recorder& rec) {
  for (const auto& name : catalog::manifold_names()) {
    const ManifoldModel m = named(name);
    const ScalarField c = catalog::field("constant", m);
    for (const Point& p : standard_basepoints(m))
      for (double r : kStandardRadii) {
        const double mean = mean_value(m, c, p, r);
        rec.close("mvp-check", m.name(), p, r, "constant", mean, 1.0, 1e-12, 1.0);
      }
  }
  const std::pair<const char*, std::vector<const char*>> harmonic[] = {
      {"euclidean2", {"linear-x", "sum-xy", "harmonic-saddle"}},
      {"euclidean3", {"linear-x", "sum-xy", "harmonic-saddle"}},
      {"hyperboloid2", {"busemann-exp"}},
      {"hyperboloid3", {"busemann-exp"}},
  };
  for (const auto& [name, fields] : harmonic) {
    const ManifoldModel m = named(name);
    std::vector<Point> points = standard_basepoints(m);
    points.push_back(displaced(m, m.dim() == 2 ? Vec{-0.6, 0.9} : Vec{-0.6, 0.9, 0.4}));
    for (const char* f : fields)
      for (const Point& p : points)
        for (double r : kStandardRadii) rec.report("mvp-check", mvp_check(m, catalog::field(f, m), p, r));
  }
  const ManifoldModel e2 = named("euclidean2");
  const ScalarField sq = catalog::field("square-x", e2);
  for (double r : kStandardRadii) {
    const IdentityReport rep = mvp_check(e2, sq, e2.basepoint(), r);
    rec.expect(!rep.passed, "square-x passed the mean-value check at r=" + format_number(r));
    rec.expect(rep.abs_residual >= r * r / 4.0 - 1e-6,
               "square-x residual " + format_number(rep.abs_residual) + " below r^2/4");
    rec.close("mvp-check", e2.name(), e2.basepoint(), r, "square-x residual", rep.abs_residual,
              r * r / 4.0, 1e-6, 1.0);
  }
}

struct Spec {
  const char* title;
  double limit;
  void (*body)(Recorder&);
};

const Spec kCriteria[kCriterionCount] = {
    {"closed-form V and A on R^2, H^2, S^2", 5, closed_form_geometry},
    {"Poincare-disk numerics vs hyperboloid closed forms", 60, pipeline_cross_validation},
    {"grad V = (1/r) dH/dr on non-homogeneous surfaces", 120, lemma21},
    {"moving-ball derivative equals sphere flux of u cos(theta)", 120, moving_ball},
    {"derivative formula for mean-value fields", 60, prop31},
    {"constant-field identity on shared nodes", 30, constant_identity},
    {"proof bounds |dH/dr|/r <= A and |Xu| <= 2 alpha A/V", 60, proof_bounds},
    {"A/V dichotomy: R^2 vanishing, H^2 bounded nonzero", 60, kinfinity},
    {"mean-value certification", 30, mvp},
};

}  // namespace

std::vector<Point> standard_basepoints(const ManifoldModel& m) {
  if (m.is_conformal()) {
    const std::string& n = m.factor().name;
    if (n == "bump") return {Point{Vec{1.5, 0.0}}, Point{Vec{0.5, 0.5}}};
    if (n == "wave") return {Point{Vec{0.5, 0.3}}, Point{Vec{1.2, -0.7}}};
    if (n == "poincare") return {Point{Vec{0.0, 0.0}}, Point{Vec{0.2, -0.1}}};
    return {Point{Vec{0.0, 0.0}}, Point{Vec{1.0, 2.0}}};
  }
  if (std::holds_alternative<Euclidean>(m.kind()))
    return m.dim() == 2 ? std::vector<Point>{m.basepoint(), Point{Vec{0.7, -1.2}}}
                        : std::vector<Point>{m.basepoint(), Point{Vec{0.3, -0.5, 0.8}}};
  const Vec offset = m.dim() == 2 ? Vec{0.6, -0.3} : Vec{0.4, 0.2, -0.5};
  return {m.basepoint(), displaced(m, offset)};
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw ContractViolation("no such acceptance criterion");
  const Spec& spec = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = spec.title;
  result.time_limit = spec.limit;
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.body(rec);
  } catch (const std::exception& e) {
    rec.error("criterion aborted", e);
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string summary_line(const CriterionResult& r) {
  char head[256];
  std::snprintf(head, sizeof head, "%s  %2d  %-58s (%d checks, %.2f s / %.0f s)",
                r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.checks, r.seconds,
                r.time_limit);
  std::ostringstream out;
  out << head;
  if (!r.within_time()) out << "\n        time limit exceeded";
  for (const auto& f : r.failures) out << "\n        " << f;
  return out.str();
}

}  // namespace horolab::acceptance
