#pragma once

#include <json.hpp>

#include "kasym/ratpoly/coeff_poly.hpp"

namespace kasym::ratpoly {

using Json = nlohmann::ordered_json;

/// ["c0", "c1", ...] over parameter degree; zero is [].
Json to_json(const ParamPoly& p);
/// Array over z-degree of ParamPoly arrays; zero is [].
Json to_json(const CoeffPoly& p);

ParamPoly param_poly_from_json(const Json& j, Param p);
CoeffPoly coeff_poly_from_json(const Json& j, Param p);

}  // namespace kasym::ratpoly
