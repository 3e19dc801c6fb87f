#include "kasym/temme/coefficients.hpp"

#include "kasym/errors.hpp"

namespace kasym::temme {
namespace {

using ratpoly::BigRational;
using ratpoly::Param;
using ratpoly::Parity;
using ratpoly::SeriesVar;

const ParamPoly& b_var() {
    static const ParamPoly v = ParamPoly::variable(Param::B);
    return v;
}

BigRational factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return BigRational(f);
}

// t/(e^t - 1) through t^order, as a rational series.
TruncSeries bernoulli_kernel(SeriesVar var, int order) {
    std::vector<CoeffPoly> c;
    for (int k = 0; k <= order; ++k) c.push_back(CoeffPoly(ParamPoly(BigRational(1) / factorial(k + 1))));
    return TruncSeries(var, order, std::move(c)).reciprocal();
}

CoeffPoly z_squared() { return CoeffPoly::monomial(ParamPoly(1), 2); }

}  // namespace

TruncSeries mu_series(int order) {
    if (order < 1) throw PreconditionError("mu_series needs order >= 1");
    // mu(s) = (1 - g(s))/s - 1/2 with g = s/(e^s - 1)
    const TruncSeries g = bernoulli_kernel(SeriesVar::S, order + 1);
    std::vector<CoeffPoly> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = -g.coeff(k + 1);
    c[0] -= CoeffPoly(ParamPoly(BigRational(1, 2)));
    return TruncSeries(SeriesVar::S, order, std::move(c));
}

std::vector<CoeffPoly> temme_base_series(int order) {
    if (order < 2) throw PreconditionError("temme_base_series needs order >= 2");
    const TruncSeries mu = mu_series(order);
    const TruncSeries exponent = mu.scaled(z_squared());
    const TruncSeries e = exponent.exp();

    // sinh(s/2)/(s/2) = sum (s/2)^{2k}/(2k+1)!
    std::vector<CoeffPoly> sh(static_cast<std::size_t>(order) + 1);
    for (int k = 0; 2 * k <= order; ++k) {
        BigRational v = BigRational(1) / factorial(2 * k + 1);
        v /= BigRational(mpz_class(1) << static_cast<unsigned>(2 * k));
        sh[static_cast<std::size_t>(2 * k)] = CoeffPoly(ParamPoly(v));
    }
    const TruncSeries kernel = TruncSeries(SeriesVar::S, order, std::move(sh)).reciprocal();
    const TruncSeries f = e * kernel.pow(b_var());

    std::vector<CoeffPoly> out;
    for (int k = 0; k <= order; ++k) out.push_back(f.coeff(k).with_parity(Parity::Even));
    return out;
}

int required_base_length(int n_max, int k_max) { return k_max + 2 * n_max + 1; }

TemmeTable temme_iterate(const std::vector<CoeffPoly>& base, int n_max, int k_max) {
    if (n_max < 0 || k_max < 1) throw PreconditionError("temme_iterate needs n_max >= 0 and k_max >= 1");
    const int need = required_base_length(n_max, k_max);
    if (static_cast<int>(base.size()) < need) {
        throw OrderStarvationError("temme_iterate(n_max=" + std::to_string(n_max) + ", k_max=" +
                                   std::to_string(k_max) + ") needs a base of length " + std::to_string(need) +
                                   ", got " + std::to_string(base.size()));
    }
    TemmeTable t;
    t.base = base;
    std::vector<CoeffPoly> level(base.begin(), base.begin() + need);
    const CoeffPoly zz = z_squared();
    const CoeffPoly minus_two_z = CoeffPoly::monomial(ParamPoly(-2), 1);
    for (int n = 0; n <= n_max; ++n) {
        t.iterated.emplace_back(level.begin(), level.begin() + k_max + 1);
        t.adagger.push_back(level[0]);
        t.bdagger.push_back(minus_two_z * level[1]);
        if (n == n_max) break;
        std::vector<CoeffPoly> next;
        for (std::size_t k = 0; k + 2 < level.size(); ++k) {
            const ParamPoly lin = ParamPoly(BigRational(1) + static_cast<long>(k), Param::B) - b_var();
            next.push_back((zz * level[k + 2] + level[k + 1].scaled(lin)).scaled(BigRational(4)));
        }
        level = std::move(next);
    }
    return t;
}

TemmeTable compute_temme_table(int n_max, int k_max) {
    return temme_iterate(temme_base_series(required_base_length(n_max, k_max) - 1), n_max, k_max);
}

std::vector<ParamPoly> generalized_bernoulli(int n_max, const ParamPoly& ell, const ParamPoly& x) {
    if (n_max < 0) throw PreconditionError("generalized_bernoulli needs n_max >= 0");
    const int order = n_max < 1 ? 1 : n_max;
    const TruncSeries kernel = bernoulli_kernel(SeriesVar::S, order).pow(ell);
    const TruncSeries shift = TruncSeries::variable(SeriesVar::S, order).scaled(CoeffPoly(x)).exp();
    const TruncSeries g = kernel * shift;
    std::vector<ParamPoly> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(g.coeff(n).coeff(0).scaled(factorial(n)));
    return out;
}

GammaRatioCoefficients gamma_ratio_coefficients(int n_max) {
    const ParamPoly one(1, Param::B);
    const ParamPoly half_b = b_var().scaled(BigRational(1, 2));
    const auto bd = generalized_bernoulli(n_max, ParamPoly(2, Param::B) - b_var(), one - half_b);
    const auto bt = generalized_bernoulli(n_max, b_var(), half_b);
    GammaRatioCoefficients out;
    mpz_class four = 1;
    for (int n = 0; n <= n_max; ++n) {
        const BigRational p4(four);
        out.d.push_back(ratpoly::binomial(one - b_var(), n) * bd[static_cast<std::size_t>(n)].scaled(p4));
        out.dtilde.push_back(ratpoly::binomial(b_var() - one, n) * bt[static_cast<std::size_t>(n)].scaled(p4));
        four *= 4;
    }
    return out;
}

}  // namespace kasym::temme
