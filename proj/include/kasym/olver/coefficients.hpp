#pragma once

#include <string>
#include <vector>

#include "kasym/ratpoly/coeff_poly.hpp"
#include "kasym/ratpoly/trunc_series.hpp"

namespace kasym::olver {

using ratpoly::CoeffPoly;
using ratpoly::Param;
using ratpoly::ParamPoly;
using ratpoly::TruncSeries;

/// Coefficient polynomials A_0..A_S (even) and B_0..B_S (odd) of the
/// Bessel-type expansion for w'' = (u^2 + (mu^2 - 1/4)/z^2 + f(z)) w,
/// normalised by A_0 = 1 and A_s(0) = 0 for s >= 1.
struct CoefficientTable {
    CoeffPoly f;
    int order = 0;
    Param param = Param::Mu;
    std::vector<CoeffPoly> A;
    std::vector<CoeffPoly> B;
};

/// f = z^2, the confluent hypergeometric case.
CoeffPoly confluent_f();

/// Runs the recursion
///   2 B_s = -A_s' + int_0^z (f A_s - (2 mu + 1) A_s'/t) dt
///   2 A_{s+1} = (2 mu + 1) B_s / z - B_s' + int f B_s dz,  A_{s+1}(0) = 0
/// for an even polynomial f (in z, with constant or mu coefficients).
/// With param = B the result is rewritten through mu = b - 1.
CoefficientTable compute_coefficient_table(const CoeffPoly& f, int order = 10, Param param = Param::Mu);

/// The same table expressed in the other parameter.
CoefficientTable convert_param(const CoefficientTable& table, Param param);

struct LoweredCoefficients {
    std::vector<CoeffPoly> a;  // a_0..a_S
    std::vector<CoeffPoly> b;  // b_0..b_S
};

/// a_0 = 1, a_{s+1} = A_{s+1}(-mu, z) + (2 mu / z) B_s(-mu, z), b_s = B_s(-mu, z).
LoweredCoefficients lower_coefficients(const CoefficientTable& table);

/// F(u, sign*mu) = 1 - 2 sign*mu sum_s B_s'(sign*mu, 0) u^{-2s-2} as a
/// series in u^{-2} truncated at `series_order` (needs B_0..B_{order-1}).
TruncSeries normalizer_series(const CoefficientTable& table, int sign, int series_order);

struct ShiftedBasis {
    std::vector<CoeffPoly> A;
    std::vector<CoeffPoly> B;
};

/// Â_s = sum_r A_r seeds[s-r], B̂_s = sum_r B_r seeds[s-r]; missing seeds
/// are zero. seeds[0] must be 1.
ShiftedBasis shift_basis(const CoefficientTable& table, const std::vector<ParamPoly>& seeds);

/// Checks the recursion for given sequences (A_0 must be 1, B_s odd); the
/// antiderivative constant in the A_{s+1} equation is left free. Returns
/// a list of violations, empty when every equation holds exactly.
std::vector<std::string> check_recursion(const CoeffPoly& f, const std::vector<CoeffPoly>& A,
                                         const std::vector<CoeffPoly>& B, Param param);

}  // namespace kasym::olver
