#pragma once

#include "dp1/algebra/bipoly.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/jacobian/model.hpp"
#include "dp1/multisection/multisection.hpp"
#include "dp1/surface/surface.hpp"

#include <json.hpp>

namespace dp1::density {

using json = nlohmann::ordered_json;

json surface_json(const surface::Surface& s);
surface::Surface surface_from_json(const json& j);

/// Sorted monomial list [[coefficient, i, j], ...].
json monomials_json(const algebra::BiPoly<algebra::Rat>& p);

json multisection_json(const multisection::MultisectionCurve& m);
json model_json(const jacobian::GenusOneModel& mdl);

/// Version string embedded in certificates.
std::string toolchain();

}  // namespace dp1::density
