#include <doctest.h>

#include "kasym/errors.hpp"
#include "kasym/olver/coefficients.hpp"
#include "kasym/ratpoly/parse.hpp"
#include "kasym/temme/coefficients.hpp"
#include "kasym/temme/identities.hpp"

using namespace kasym::temme;
using kasym::ratpoly::BigRational;
using kasym::ratpoly::Param;
using kasym::ratpoly::parse_coeff_poly;
using kasym::ratpoly::parse_param_poly;

namespace {

CoeffPoly P(std::string_view s) { return parse_coeff_poly(s); }

// Classical Bernoulli numbers from sum_{j<=n} binom(n+1, j) B_j = 0.
std::vector<BigRational> bernoulli_numbers(int n_max) {
    std::vector<BigRational> B{1};
    for (int n = 1; n <= n_max; ++n) {
        BigRational acc = 0;
        mpz_class binom = 1;  // binom(n+1, j)
        for (int j = 0; j < n; ++j) {
            acc += BigRational(binom) * B[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        B.push_back(-acc / BigRational(n + 1));
    }
    return B;
}

}  // namespace

TEST_CASE("mu(s) series against classical Bernoulli numbers") {
    const int order = 12;
    const TruncSeries mu = mu_series(order);
    const auto B = bernoulli_numbers(order + 1);
    mpz_class fact = 1;
    CHECK(mu.coeff(0).is_zero());
    for (int k = 1; k <= order; ++k) {
        fact *= k + 1;
        // mu(s) = -sum_{k>=1} B_{k+1} s^k / (k+1)!
        const BigRational want = -B[k + 1] / BigRational(fact);
        CHECK(mu.coeff(k) == CoeffPoly(ParamPoly(want)));
    }
    CHECK(mu.coeff(1) == P("-1/12"));
    CHECK(mu.coeff(2).is_zero());
}

TEST_CASE("base series of f(s, z)") {
    const auto c = temme_base_series(6);
    CHECK(c[0] == P("1"));
    CHECK(c[1] == P("-z^2/12"));
    CHECK(c[2] == P("z^4/288 - b/24"));
    for (std::size_t k = 1; k < c.size(); k += 2) CHECK(c[k].at_zero().is_zero());
    CHECK_THROWS_AS(temme_base_series(1), kasym::PreconditionError);
}

TEST_CASE("iterated coefficients") {
    const TemmeTable t = compute_temme_table(3);
    CHECK(t.adagger[0] == P("1"));
    CHECK(t.bdagger[0] == P("z^3/6"));
    CHECK(t.adagger[1] == P("z^6/72 + (b-2)*z^2/6"));
    CHECK(t.iterated.size() == 4);
    CHECK(t.iterated[0].size() == 3);

    const auto base = temme_base_series(10);
    CHECK(required_base_length(8, 2) == 19);
    CHECK_THROWS_AS(temme_iterate(base, 8, 2), kasym::OrderStarvationError);
    CHECK_NOTHROW(temme_iterate(base, 4, 2));
}

TEST_CASE("generalized Bernoulli polynomials") {
    const ParamPoly ell = parse_param_poly("b");
    const ParamPoly x = parse_param_poly("3*b/2 - 1");
    const auto B = generalized_bernoulli(4, ell, x);
    CHECK(B[0] == ParamPoly(1));
    CHECK(B[1] == x - ell.scaled(BigRational(1, 2)));

    const auto zero = generalized_bernoulli(5, ParamPoly(0), ParamPoly(0));
    for (int n = 1; n <= 5; ++n) CHECK(zero[n].is_zero());

    // order 1 at x = 0 gives the classical numbers
    const auto classical = generalized_bernoulli(10, ParamPoly(1), ParamPoly(0));
    const auto want = bernoulli_numbers(10);
    for (int n = 0; n <= 10; ++n) CHECK(classical[n] == ParamPoly(want[n]));
}

TEST_CASE("gamma-ratio coefficients") {
    const auto g = gamma_ratio_coefficients(5);
    CHECK(g.d[0] == ParamPoly(1));
    CHECK(g.d[1].is_zero());
    CHECK(g.d[3].is_zero());
    CHECK(g.d[5].is_zero());
    // from an independent symbolic series expansion
    CHECK(g.d[2] == parse_param_poly("2*b^3/3 - 2*b^2 + 4*b/3"));
    CHECK(g.d[4] == parse_param_poly("2*b^6/9 - 8*b^5/15 - 10*b^4/9 + 8*b^3/3 + 8*b^2/9 - 32*b/15"));
    CHECK(g.dtilde[2] == parse_param_poly("-2*b^3/3 + 2*b^2 - 4*b/3"));
    CHECK(g.dtilde[4] == parse_param_poly("2*b^6/9 - 32*b^5/15 + 62*b^4/9 - 8*b^3 + 8*b^2/9 + 32*b/15"));
}

TEST_CASE("identity suite passes") {
    const auto results = run_identity_suite(6);
    CHECK(results.size() >= 13);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
