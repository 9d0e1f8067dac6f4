#pragma once

#include "horolab/manifold.hpp"

namespace horolab::poincare {

/// Disk chart point z -> ((1 + |z|^2) / (1 - |z|^2), 2 z / (1 - |z|^2)) on H^2.
Point to_hyperboloid(const Point& z);
/// Inverse map x -> x_spatial / (1 + x0).
Point to_disk(const Point& x);
/// Differential of to_hyperboloid at z applied to a chart vector.
TangentVector push_forward(const Point& z, const Vec& dz);
/// Chart vector at z whose push-forward is v (v tangent at to_hyperboloid(z)).
Vec pull_back(const Point& z, const TangentVector& v);

}  // namespace horolab::poincare
