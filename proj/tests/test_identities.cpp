#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "horolab/catalog.hpp"
#include "horolab/errors.hpp"
#include "horolab/identities.hpp"
#include "horolab/integrals.hpp"

using namespace horolab;

namespace {

constexpr double kPi = std::numbers::pi;

TangentVector first_basis(const ManifoldModel& m, const Point& p) { return orthonormal_basis(m, p)[0]; }

}  // namespace

TEST_CASE("cos_angle examples") {
  auto e = ManifoldModel::euclidean(2);
  Point o{{0, 0}};
  TangentVector X{o, {1, 0}};
  CHECK(cos_angle(e, o, X, Point{{0, 1}}) == doctest::Approx(0.0));
  CHECK(cos_angle(e, o, X, Point{{3, 0}}) == 1.0);
  CHECK_THROWS_AS(cos_angle(e, o, X, o), DomainError);

  auto h = ManifoldModel::hyperboloid(2);
  auto apex = h.basepoint();
  double c = cos_angle(h, apex, TangentVector{apex, {0, 1, 0}},
                       Point{{std::cosh(1.0), 0, std::sinh(1.0)}});
  CHECK(std::fabs(c) < 1e-14);
}

TEST_CASE("cos_angle stays in [-1, 1]") {
  auto s = ManifoldModel::sphere(2);
  auto p = s.basepoint();
  TangentVector X{p, {1, 0, 0}};
  for (double a = 0.0; a < 2 * kPi; a += 0.1) {
    auto q = exp_map(s, p, TangentVector{p, {2.0 * std::cos(a), 2.0 * std::sin(a), 0}});
    double c = cos_angle(s, p, X, q);
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
    CHECK(c == doctest::Approx(std::cos(a)).epsilon(1e-10));
  }
}

TEST_CASE("mean_value examples") {
  for (const auto& name : catalog::manifold_names()) {
    auto m = catalog::manifold(name);
    auto u = catalog::field("constant", m);
    CHECK_MESSAGE(std::fabs(mean_value(m, u, m.basepoint(), 1.0) - 1.0) < 1e-12, name);
  }
  auto e = ManifoldModel::euclidean(2);
  auto x = catalog::field("linear-x", e);
  CHECK(std::fabs(mean_value(e, x, Point{{2.5, -1}}, 1.5) - 2.5) < 1e-10);

  auto h = ManifoldModel::hyperboloid(2);
  auto b = catalog::field("busemann-exp", h);
  double mv = mean_value(h, b, h.basepoint(), 1.0);
  CHECK(std::fabs(mv - 1.0) < 1e-8);
  CHECK(std::fabs(mv - mean_value(h, b, h.basepoint(), 1.0, QuadratureOrders{}.doubled())) < 1e-10);
}

TEST_CASE("equality and bound reports") {
  auto r = equality_report(Identity::Lemma21, Vec{1.0, 0.0}, Vec{1.0005, 0.0}, 1e-3, {});
  CHECK(r.abs_residual == doctest::Approx(5e-4));
  CHECK(r.rel_residual == doctest::Approx(5e-4 / 1.0005));
  CHECK(r.passed);
  auto z = equality_report(Identity::Lemma21, Vec{0.0}, Vec{0.0}, 1e-3, {});
  CHECK(z.rel_residual == 0.0);
  CHECK(z.passed);
  auto f = equality_report(Identity::Lemma21, Vec{1.0}, Vec{2.0}, 1e-3, {});
  CHECK_FALSE(f.passed);

  auto ok = bound_report(Identity::HNormBound, 1.0, 2.0, 1e-10, {});
  CHECK(ok.passed);
  auto bad = bound_report(Identity::HNormBound, 2.0, 1.0, 1e-10, {});
  CHECK_FALSE(bad.passed);
  CHECK(identity_name(Identity::Prop31) == "prop31");
}

TEST_CASE("gradient of V equals the scaled radial derivative of H") {
  auto e = ManifoldModel::euclidean(2);
  auto re = lemma21_residual(e, Point{{1, 2}}, 1.0);
  CHECK(re.passed);
  CHECK(norm(re.lhs) < 1e-9);
  CHECK(norm(re.rhs) < 1e-12);

  auto h = ManifoldModel::hyperboloid(2);
  CHECK(lemma21_residual(h, h.basepoint(), 2.0).passed);

  auto bump = catalog::manifold("bump-surface");
  auto rb = lemma21_residual(bump, Point{{1.5, 0}}, 1.0);
  CHECK(norm(rb.lhs) > 1e-3);
  CHECK(norm(rb.rhs) > 1e-3);
  CHECK(rb.rel_residual <= kLemma21Tolerance);
  CHECK(rb.passed);
}

TEST_CASE("gradient of V equals the scaled radial derivative of H across the catalog") {
  for (const auto& name : catalog::manifold_names()) {
    auto m = catalog::manifold(name);
    for (double r : {0.5, 1.0}) {
      auto rep = lemma21_residual(m, m.basepoint(), r);
      CHECK_MESSAGE(rep.passed, name << " r=" << r << " rel=" << rep.rel_residual);
    }
  }
}

TEST_CASE("moving-ball derivative") {
  auto e = ManifoldModel::euclidean(2);
  Point o{{0, 0}};
  auto one = catalog::field("constant", e);
  auto r0 = moving_ball_derivative_check(e, one, o, TangentVector{o, {1, 0}}, 1.0);
  CHECK(std::fabs(r0.lhs[0]) < 1e-9);
  CHECK(std::fabs(r0.rhs[0]) < 1e-12);

  auto x = catalog::field("linear-x", e);
  auto rx = moving_ball_derivative_check(e, x, o, TangentVector{o, {1, 0}}, 1.0);
  CHECK(std::fabs(rx.lhs[0] - kPi) < 1e-10);
  CHECK(std::fabs(rx.rhs[0] - kPi) < 1e-10);

  auto bump = catalog::manifold("bump-surface");
  Point p{{0.5, 0.5}};
  auto u = catalog::field("sum-xy", bump);
  auto rb = moving_ball_derivative_check(bump, u, p, first_basis(bump, p), 0.8);
  CHECK(rb.rel_residual <= kMovingBallTolerance);
}

TEST_CASE("moving-ball identity holds for non-MVP fields") {
  for (const auto& [name, field] : std::vector<std::pair<std::string, std::string>>{
           {"sphere2", "gaussian"}, {"hyperboloid3", "square-x"}, {"wave-surface", "square-x"},
           {"poincare-disk", "gaussian"}}) {
    auto m = catalog::manifold(name);
    auto p = m.basepoint();
    auto rep = moving_ball_derivative_check(m, catalog::field(field, m), p, first_basis(m, p), 1.0);
    CHECK_MESSAGE(rep.passed, name << " " << field << " rel=" << rep.rel_residual);
  }
}

TEST_CASE("derivative formula on the plane") {
  auto e = ManifoldModel::euclidean(2);
  auto x = catalog::field("linear-x", e);
  Point p{{0.7, -1.2}};
  for (double r : {0.5, 1.0, 2.0}) {
    auto rep = prop31_residual(e, x, p, TangentVector{p, {1, 0}}, r);
    CHECK(std::fabs(rep.lhs[0] - 1.0) < 1e-8);
    CHECK(std::fabs(rep.rhs[0] - 1.0) < 1e-8);
  }
}

TEST_CASE("derivative formula with the Busemann field") {
  auto h = ManifoldModel::hyperboloid(2);
  auto u = catalog::field("busemann-exp", h);
  auto apex = h.basepoint();
  for (double r : {0.5, 1.0, 2.0}) {
    auto along = prop31_residual(h, u, apex, TangentVector{apex, {0, 1, 0}}, r);
    CHECK(along.lhs[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(along.rhs[0] - 1.0) < 1e-4);
    CHECK(along.passed);
    auto across = prop31_residual(h, u, apex, TangentVector{apex, {0, 0, 1}}, r);
    CHECK(across.lhs[0] == 0.0);
    CHECK(std::fabs(across.rhs[0]) < 1e-6);
  }
}

TEST_CASE("derivative formula requires the mean-value property") {
  auto bump = catalog::manifold("bump-surface");
  auto u = catalog::field("square-x", bump);
  Point p{{0, 0}};
  CHECK_THROWS_AS(prop31_residual(bump, u, p, first_basis(bump, p), 1.0), PreconditionError);
}

TEST_CASE("directional derivative by finite differences") {
  auto h = ManifoldModel::hyperboloid(2);
  auto u = catalog::field("busemann-exp", h);
  u.directional_derivative = nullptr;
  auto apex = h.basepoint();
  // Along the first axis u(c(t)) = e^t.
  CHECK(directional_derivative(h, u, apex, TangentVector{apex, {0, 1, 0}}) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant-field identity") {
  auto e = ManifoldModel::euclidean(2);
  Point o{{0, 0}};
  auto re = constant_field_identity(e, o, TangentVector{o, {1, 0}}, 1.0);
  CHECK(std::fabs(re.lhs[0]) < 1e-12);
  CHECK(re.passed);

  auto bump = catalog::manifold("bump-surface");
  Point p{{1.5, 0}};
  auto rb = constant_field_identity(bump, p, first_basis(bump, p), 1.0);
  CHECK(std::fabs(rb.lhs[0]) > 1e-4);
  CHECK(rb.rel_residual <= 1e-12);

  auto s = ManifoldModel::sphere(2);
  auto sp = s.basepoint();
  CHECK(constant_field_identity(s, sp, first_basis(s, sp), 2.0).rel_residual <= 1e-12);
}

TEST_CASE("gradient and H-norm bounds") {
  auto e = ManifoldModel::euclidean(2);
  Point o{{0, 0}};
  auto reports = gradient_bound_check(e, catalog::field("linear-x", e), o, 1.0);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].lhs[0] == doctest::Approx(1.0));
  CHECK(reports[0].rhs[0] == doctest::Approx(24.0));
  for (const auto& r : reports) CHECK(r.passed);

  auto h = ManifoldModel::hyperboloid(2);
  for (const auto& r : gradient_bound_check(h, catalog::field("constant", h), h.basepoint(), 2.0))
    CHECK(r.passed);

  auto u = catalog::field("constant", e);
  u.sup_bound.reset();
  CHECK_THROWS_AS(gradient_bound_check(e, u, o, 1.0), PreconditionError);

  auto bump = catalog::manifold("bump-surface");
  auto hb = hnorm_bound_check(bump, Point{{1.5, 0}}, 1.0);
  CHECK(hb.passed);
  CHECK(hb.lhs[0] < hb.rhs[0]);
  auto hh = hnorm_bound_check(h, h.basepoint(), 10.0);
  CHECK(hh.passed);
  CHECK(hh.rhs[0] == doctest::Approx(2 * kPi * std::sinh(10.0)).epsilon(1e-10));
}

TEST_CASE("mean-value check") {
  auto e = ManifoldModel::euclidean(2);
  Point o{{0, 0}};
  auto sq = mvp_check(e, catalog::field("square-x", e), o, 1.0);
  CHECK_FALSE(sq.passed);
  // Mean of x^2 over the unit disc is 1/4.
  CHECK(sq.abs_residual >= 0.25 - 1e-6);

  auto h3 = ManifoldModel::hyperboloid(3);
  auto b = catalog::field("busemann-exp", h3);
  for (double r : {0.5, 1.0, 2.0}) CHECK(mvp_check(h3, b, h3.basepoint(), r).passed);
}

TEST_CASE("mean-value certification across the catalog") {
  for (const auto& name : catalog::manifold_names()) {
    auto m = catalog::manifold(name);
    for (const auto& fname : catalog::field_names()) {
      if (!catalog::field_available(fname, m)) continue;
      auto u = catalog::field(fname, m);
      if (!u.claims_mvp) continue;
      for (double r : {0.5, 1.0, 2.0}) {
        auto rep = mvp_check(m, u, m.basepoint(), r);
        double up = u.evaluate(m.basepoint());
        CHECK_MESSAGE(rep.abs_residual <= 1e-6 * std::max(1.0, std::fabs(up)), name << " " << fname);
      }
    }
  }
}

TEST_CASE("K-infinity scans") {
  auto e = ManifoldModel::euclidean(2);
  auto se = kinfinity_scan(e, e.basepoint(), {10, 25, 50, 100});
  for (std::size_t i = 0; i < se.radii.size(); ++i)
    CHECK(std::fabs(se.ratios[i] - 2.0 / se.radii[i]) < 1e-8);
  CHECK(se.classification == KClass::Vanishing);
  CHECK(se.monotone_decreasing);

  auto h = ManifoldModel::hyperboloid(2);
  auto sh = kinfinity_scan(h, h.basepoint(), {2, 5, 8, 10});
  for (std::size_t i = 0; i < sh.radii.size(); ++i)
    CHECK(std::fabs(sh.ratios[i] - 1.0 / std::tanh(sh.radii[i] / 2)) < 1e-3);
  CHECK(sh.classification == KClass::BoundedNonzero);
  CHECK(std::fabs(sh.extrapolated_limit - 1.0) < 1e-3);

  auto s = ManifoldModel::sphere(2);
  auto ss = kinfinity_scan(s, s.basepoint(), {1.0, 2.0, 3.0});
  CHECK(ss.domain_limited);
  CHECK_THROWS(kinfinity_scan(s, s.basepoint(), {1.0, 3.5}));
}

TEST_CASE("moving-ball identity where both sides vanish by symmetry") {
  // Bump metric and Gaussian field are both even in y, so moving along e2 changes nothing.
  auto bump = catalog::manifold("bump-surface");
  Point p{{1.5, 0}};
  auto basis = orthonormal_basis(bump, p);
  auto rep = moving_ball_derivative_check(bump, catalog::field("gaussian", bump), p, basis[1], 0.3);
  CHECK(std::fabs(rep.lhs[0]) < 1e-12);
  CHECK(std::fabs(rep.rhs[0]) < 1e-12);
  CHECK(rep.passed);
}
