#include "horolab/runner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "horolab/catalog.hpp"
#include "horolab/errors.hpp"

namespace horolab::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_vec(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_number(v[i]);
  }
  return s;
}

CsvRow row_from_report(std::string_view suite, const IdentityReport& rep) {
  const ReportContext& c = rep.context;
  return {std::string(suite),
          c.manifold,
          format_vec(c.point),
          format_number(c.radius),
          c.direction.size() ? format_vec(c.direction) : "-",
          c.field.empty() ? "-" : c.field,
          format_vec(rep.lhs),
          format_vec(rep.rhs),
          format_number(rep.abs_residual),
          format_number(rep.rel_residual),
          format_number(rep.tolerance),
          rep.passed};
}

namespace {

CsvRow failure_row(std::string_view suite, const ExperimentPlan& plan, const Point& p, double r,
                   const Vec* X, const std::string& field) {
  const std::string nan = format_number(std::nan(""));
  return {std::string(suite), plan.manifold.name(), format_vec(p.coords), format_number(r),
          X ? format_vec(*X) : "-", field.empty() ? "-" : field, nan, nan, nan, nan, nan, false};
}

std::vector<Vec> tangents_of(const ExperimentPlan& plan) {
  if (!plan.tangents.empty()) return plan.tangents;
  std::vector<Vec> out;
  for (int i = 0; i < plan.manifold.dim(); ++i)
    out.push_back(Vec::unit(static_cast<std::size_t>(plan.manifold.dim()), static_cast<std::size_t>(i)));
  return out;
}

}  // namespace

RunResult run(const ExperimentPlan& plan, std::ostream& log) {
  const ManifoldModel& m = plan.manifold;
  const QuadratureOrders& q = plan.quadrature;
  const auto directions = tangents_of(plan);
  RunResult result;

  auto record = [&](CsvRow row) {
    (row.passed ? result.passed : result.failed) += 1;
    result.rows.push_back(std::move(row));
  };
  // Runs one cell; horolab::Error becomes a failed row.
  auto guarded = [&](std::string_view suite, const Point& p, double r, const Vec* X,
                     const std::string& field, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      log << "  " << suite << " failed at r=" << r << ": " << e.what() << '\n';
      record(failure_row(suite, plan, p, r, X, field));
    }
  };

  for (const std::string& suite : plan.suites) {
    for (const Point& p : plan.basepoints) {
      const auto basis = orthonormal_basis(m, p);
      if (suite == "kinfty") {
        guarded(suite, p, plan.radii.back(), nullptr, "", [&] {
          const KInfinityScan scan = kinfinity_scan(m, p, plan.radii, q);
          for (std::size_t i = 0; i < scan.radii.size(); ++i) {
            const double diff = std::fabs(scan.ratios[i] - scan.extrapolated_limit);
            record({suite, m.name(), format_vec(p.coords), format_number(scan.radii[i]), "-",
                    std::string(kclass_name(scan.classification)), format_number(scan.ratios[i]),
                    format_number(scan.extrapolated_limit), format_number(diff),
                    format_number(diff / scan.extrapolated_limit), "-", true});
          }
          log << "  kinfty " << m.name() << " at " << format_vec(p.coords) << ": limit "
              << scan.extrapolated_limit << ", " << kclass_name(scan.classification)
              << (scan.monotone_decreasing ? ", decreasing" : "")
              << (scan.domain_limited ? ", domain-limited" : "") << '\n';
        });
        continue;
      }
      for (double r : plan.radii) {
        if (suite == "lemma21") {
          guarded(suite, p, r, nullptr, "",
                  [&] { record(row_from_report(suite, lemma21_residual(m, p, r, q))); });
        } else if (suite == "hnorm-bound") {
          guarded(suite, p, r, nullptr, "",
                  [&] { record(row_from_report(suite, hnorm_bound_check(m, p, r, q))); });
        } else if (suite == "constant-identity") {
          for (const Vec& x : directions)
            guarded(suite, p, r, &x, "constant", [&] {
              record(row_from_report(suite, constant_field_identity(m, p, from_basis(basis, x), r, q)));
            });
        } else {
          for (const std::string& name : plan.fields) {
            const ScalarField u = catalog::field(name, m);
            if ((suite == "prop31" || suite == "gradient-bound") && !u.claims_mvp) {
              ++result.skipped;
              continue;
            }
            if (suite == "mvp-check") {
              guarded(suite, p, r, nullptr, name,
                      [&] { record(row_from_report(suite, mvp_check(m, u, p, r, q))); });
            } else if (suite == "gradient-bound") {
              guarded(suite, p, r, nullptr, name, [&] {
                for (const auto& rep : gradient_bound_check(m, u, p, r, q))
                  record(row_from_report(suite, rep));
              });
            } else {
              for (const Vec& x : directions)
                guarded(suite, p, r, &x, name, [&] {
                  const TangentVector X = from_basis(basis, x);
                  record(row_from_report(suite, suite == "prop31"
                                                    ? prop31_residual(m, u, p, X, r, q)
                                                    : moving_ball_derivative_check(m, u, p, X, r, q)));
                });
            }
          }
        }
      }
    }
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << "suite,manifold,point,radius,direction,field,lhs,rhs,abs_residual,rel_residual,"
         "tolerance,passed\n";
  for (const CsvRow& r : rows)
    out << r.suite << ',' << r.manifold << ',' << r.point << ',' << r.radius << ',' << r.direction
        << ',' << r.field << ',' << r.lhs << ',' << r.rhs << ',' << r.abs_residual << ','
        << r.rel_residual << ',' << r.tolerance << ',' << (r.passed ? 1 : 0) << '\n';
}

std::string list_catalog() {
  std::ostringstream out;
  out << "manifolds:\n";
  for (const auto& name : catalog::manifold_names()) {
    const ManifoldModel m = catalog::manifold(name);
    const double inj = injectivity_bound(m, m.basepoint());
    out << "  " << name << "  dim=" << m.dim() << "  injectivity="
        << (std::isfinite(inj) ? format_number(inj) : std::string("inf")) << '\n';
  }
  out << "fields:\n";
  for (const auto& name : catalog::field_names()) {
    out << "  " << name << ":";
    for (const auto& mname : catalog::manifold_names()) {
      const ManifoldModel m = catalog::manifold(mname);
      if (!catalog::field_available(name, m)) continue;
      const ScalarField u = catalog::field(name, m);
      out << "\n    on " << mname << "  claims_mvp=" << (u.claims_mvp ? "true" : "false")
          << "  sup_bound=" << (u.sup_bound ? format_number(*u.sup_bound) : std::string("none"));
    }
    out << '\n';
  }
  out << "suites:\n";
  for (const auto& s : catalog::suite_names()) out << "  " << s << '\n';
  return out.str();
}

}  // namespace horolab::cli
