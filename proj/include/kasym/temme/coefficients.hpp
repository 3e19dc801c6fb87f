#pragma once

#include <string>
#include <vector>

#include "kasym/ratpoly/coeff_poly.hpp"
#include "kasym/ratpoly/trunc_series.hpp"

namespace kasym::temme {

using ratpoly::CoeffPoly;
using ratpoly::ParamPoly;
using ratpoly::TruncSeries;

/// Maclaurin series of mu(s) = 1/s - 1/(e^s - 1) - 1/2 through s^order.
TruncSeries mu_series(int order);

/// c_0..c_order with f(s, z) = exp(z^2 mu(s)) ((s/2)/sinh(s/2))^b = sum c_k(z) s^k.
std::vector<CoeffPoly> temme_base_series(int order);

struct TemmeTable {
    std::vector<CoeffPoly> base;
    /// iterated[n][k] = c_k^(n) for k <= k_max.
    std::vector<std::vector<CoeffPoly>> iterated;
    std::vector<CoeffPoly> adagger;  // c_0^(n)
    std::vector<CoeffPoly> bdagger;  // -2 z c_1^(n)
};

/// Minimum base length for temme_iterate(n_max, k_max).
int required_base_length(int n_max, int k_max);

/// c_k^(n+1) = 4 (z^2 c_{k+2}^(n) + (1 - b + k) c_{k+1}^(n)), then
/// a_n^dagger = c_0^(n), b_n^dagger = -2 z c_1^(n). Needs k_max >= 1.
TemmeTable temme_iterate(const std::vector<CoeffPoly>& base, int n_max, int k_max = 2);

/// Convenience: base series of the right length, then iteration.
TemmeTable compute_temme_table(int n_max, int k_max = 2);

/// B_n^(ell)(x) for n = 0..n_max, from (t/(e^t-1))^ell e^{xt} = sum B_n t^n/n!.
/// ell and x are polynomials in b (or constants).
std::vector<ParamPoly> generalized_bernoulli(int n_max, const ParamPoly& ell, const ParamPoly& x);

struct GammaRatioCoefficients {
    std::vector<ParamPoly> d;       // 4^n binom(1-b, n) B_n^(2-b)(1 - b/2)
    std::vector<ParamPoly> dtilde;  // 4^n binom(b-1, n) B_n^(b)(b/2)
};

GammaRatioCoefficients gamma_ratio_coefficients(int n_max);

}  // namespace kasym::temme
