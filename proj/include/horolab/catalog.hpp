#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "horolab/identities.hpp"
#include "horolab/manifold.hpp"

namespace horolab::catalog {

std::vector<std::string> manifold_names();
/// Throws std::invalid_argument for unknown names.
ManifoldModel manifold(std::string_view name);

/// Radius of the working domain around the basepoint (chart radius for
/// chart models, geodesic radius from the apex on the hyperboloid).
double working_domain_radius(const ManifoldModel& m);

std::vector<std::string> field_names();
/// Field instance on m. Throws std::invalid_argument for unknown names or
/// fields not defined on m (busemann-exp lives on the hyperboloid only).
ScalarField field(std::string_view name, const ManifoldModel& m);
bool field_available(std::string_view name, const ManifoldModel& m);

/// Names accepted in plan files, in canonical order.
std::vector<std::string> suite_names();

}  // namespace horolab::catalog
