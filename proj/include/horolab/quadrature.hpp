#pragma once

#include <span>
#include <vector>

#include "horolab/vec.hpp"

namespace horolab {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], nodes
/// ascending and exactly antisymmetric (x[n-1-i] == -x[i]).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Unit directions at p, as coefficients in the orthonormal basis, with
/// weights summing to the measure of the unit sphere. The second half of
/// the grid is the antipodal image of the first half, node for node.
struct DirectionGrid {
  std::vector<Vec> directions;
  std::vector<double> weights;
  int order = 0;
};

/// dim 1: {+1, -1}. dim 2: `order` equispaced angles (order even).
/// dim 3: Gauss-Legendre in cos(polar) with `order` nodes times `azimuth`
/// equispaced angles (both even).
DirectionGrid direction_grid(int dim, int order, int azimuth = 0);

/// Gauss-Legendre rule mapped to (0, r).
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};
RadialRule radial_rule(double r, int order);

struct QuadratureOrders {
  int directions_2d = 256;
  int polar_3d = 32;
  int azimuth_3d = 64;
  int radial = 64;

  /// Order recorded in reports: direction count in 2-D, polar count in 3-D.
  int direction_order(int dim) const { return dim == 3 ? polar_3d : directions_2d; }
  QuadratureOrders doubled() const {
    return {2 * directions_2d, 2 * polar_3d, 2 * azimuth_3d, 2 * radial};
  }
};

DirectionGrid direction_grid(int dim, const QuadratureOrders& orders);

/// Pairwise summation with a fixed split topology (halves, recursively), so
/// the rounding pattern depends only on the number of terms.
double pairwise_sum(std::span<const double> values);

}  // namespace horolab
