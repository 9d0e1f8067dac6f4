// Serial reference kernels against the OpenMP polar-grid kernels.
//   bench_integrals [repeats]
// HOROLAB_THREADS caps the thread count of the parallel kernels.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "horolab/catalog.hpp"
#include "horolab/integrals.hpp"

using namespace horolab;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::fmin(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

struct Case {
  const char* manifold;
  Vec point;
  double r;
};

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (const char* t = std::getenv("HOROLAB_THREADS")) omp_set_num_threads(std::atoi(t));

  const Case cases[] = {{"euclidean2", {0.0, 0.0}, 1.0},
                        {"hyperboloid3", {}, 1.0},
                        {"bump-surface", {1.5, 0.0}, 1.0},
                        {"poincare-disk", {0.2, -0.1}, 1.5}};
  const auto f = [](const Point& q) { return std::cos(q.coords[0]) * q.coords[1]; };

  std::printf("threads %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-14s %-10s %12s %12s %8s %12s\n", "manifold", "kernel", "serial [s]", "omp [s]",
              "speedup", "max |diff|");
  for (const auto& c : cases) {
    const ManifoldModel m = catalog::manifold(c.manifold);
    const Point p = c.point.size() ? m.point(c.point) : m.basepoint();

    double a = 0, b = 0;
    const double ts = best_of(repeats, [&] { a = reference::ball_integral(m, p, c.r, f); });
    const double tp = best_of(repeats, [&] { b = ball_integral(m, p, c.r, f); });
    std::printf("%-14s %-10s %12.4f %12.4f %8.2f %12.3g\n", c.manifold, "ball", ts, tp, ts / tp,
                std::fabs(a - b));

    Vec ha, hb;
    const double hs = best_of(repeats, [&] { ha = reference::stability_field_coefficients(m, p, c.r); });
    const double hp = best_of(repeats, [&] { hb = stability_field_coefficients(m, p, c.r); });
    std::printf("%-14s %-10s %12.4f %12.4f %8.2f %12.3g\n", c.manifold, "stability", hs, hp, hs / hp,
                max_abs_diff(ha, hb));
  }
  return 0;
}
