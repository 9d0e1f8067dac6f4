#include "horolab/poincare.hpp"

namespace horolab::poincare {

Point to_hyperboloid(const Point& z) {
  const double a = z.coords[0], b = z.coords[1];
  const double d = 1.0 - a * a - b * b;
  return Point{Vec{(2.0 - d) / d, 2.0 * a / d, 2.0 * b / d}};
}

Point to_disk(const Point& x) {
  const double s = 1.0 + x.coords[0];
  return Point{Vec{x.coords[1] / s, x.coords[2] / s}};
}

TangentVector push_forward(const Point& z, const Vec& dz) {
  const double a = z.coords[0], b = z.coords[1];
  const double d = 1.0 - a * a - b * b;
  const double zdz = a * dz[0] + b * dz[1];
  const double d2 = d * d;
  return {to_hyperboloid(z),
          Vec{4.0 * zdz / d2, 2.0 * dz[0] / d + 4.0 * a * zdz / d2,
              2.0 * dz[1] / d + 4.0 * b * zdz / d2}};
}

Vec pull_back(const Point& z, const TangentVector& v) {
  // The push-forward is conformal with factor 2 / (1 - |z|^2): solve against
  // the images of the chart axes using the Lorentz inner product.
  const TangentVector ex = push_forward(z, Vec{1.0, 0.0});
  const TangentVector ey = push_forward(z, Vec{0.0, 1.0});
  const double s2 = lorentz(ex.components, ex.components);
  return Vec{lorentz(v.components, ex.components) / s2, lorentz(v.components, ey.components) / s2};
}

}  // namespace horolab::poincare
