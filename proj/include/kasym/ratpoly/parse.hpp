#pragma once

#include <string_view>

#include "kasym/ratpoly/coeff_poly.hpp"

namespace kasym::ratpoly {

/// Parses a polynomial expression in z and one of mu / b, e.g.
/// "z^2", "z2", "(2*mu+1)*z/3", "1 - b/2". Supports + - * ^ (non-negative
/// integer exponents), division by constants, parentheses and exact decimal
/// literals. The result's declared parity is its actual parity.
CoeffPoly parse_coeff_poly(std::string_view text);

/// As parse_coeff_poly, rejecting any occurrence of z.
ParamPoly parse_param_poly(std::string_view text);

}  // namespace kasym::ratpoly
