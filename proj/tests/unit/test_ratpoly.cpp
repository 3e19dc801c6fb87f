#include <doctest.h>

#include <random>

#include "kasym/errors.hpp"
#include "kasym/ratpoly/coeff_poly.hpp"
#include "kasym/ratpoly/parse.hpp"
#include "kasym/ratpoly/serialize.hpp"
#include "kasym/ratpoly/trunc_series.hpp"

using namespace kasym::ratpoly;
using kasym::DivisibilityError;
using kasym::MixedParameterError;
using kasym::ParityError;
using kasym::ParseError;
using kasym::SeriesDomainError;

namespace {

const ParamPoly mu = ParamPoly::variable(Param::Mu);
const ParamPoly b = ParamPoly::variable(Param::B);

BigRational q(long p, long d) {
    BigRational r(p, d);
    r.canonicalize();
    return r;
}

CoeffPoly P(std::string_view s) { return parse_coeff_poly(s); }

struct RandomPolys {
    std::mt19937 rng{20240611};

    BigRational rational() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 7);
        return q(num(rng), den(rng));
    }
    ParamPoly param_poly() {
        std::uniform_int_distribution<int> deg(0, 3);
        std::vector<BigRational> c;
        for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(rational());
        return ParamPoly(Param::Mu, c);
    }
    CoeffPoly coeff_poly(int max_deg = 4) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        std::vector<ParamPoly> c;
        for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(param_poly());
        return CoeffPoly(c);
    }
};

}  // namespace

TEST_CASE("rationals are canonical and round-trip as p/q strings") {
    CHECK(to_string(parse_rational("-2/6")) == "-1/3");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK(rational_to<double>(q(1, 3)) == 1.0 / 3.0);
}

TEST_CASE("ParamPoly arithmetic and parameter discipline") {
    const ParamPoly p = mu * mu - ParamPoly(1);
    CHECK(p.degree() == 2);
    CHECK((p - mu * mu + ParamPoly(1)).is_zero());
    CHECK(p.divide_exact(mu - ParamPoly(1)) == mu + ParamPoly(1));
    CHECK_THROWS_AS(p.divide_exact(mu + ParamPoly(2)), DivisibilityError);
    CHECK_THROWS_AS(mu + b, MixedParameterError);
    CHECK((ParamPoly(3) * b).param() == Param::B);

    // mu -> b - 1
    CHECK(mu.substitute(b - ParamPoly(1)) == b - ParamPoly(1));
    // constants are fixed points
    CHECK(ParamPoly(1).substitute(-mu) == ParamPoly(1));
    CHECK(binomial(ParamPoly(1) - b, 2) == (ParamPoly(1) - b) * (-b) * ParamPoly(q(1, 2)));
}

TEST_CASE("CoeffPoly calculus operations") {
    CHECK(P("z^2").integrate_from_zero() == P("z^3/3"));
    CHECK(CoeffPoly().integrate_from_zero().is_zero());
    CHECK(P("(2*mu+1)*z").integrate_from_zero() == P("(2*mu+1)*z^2/2"));
    CHECK(P("z^2").integrate_from_zero().parity() == Parity::Odd);

    CHECK(P("z^3/6").divide_by_z() == P("z^2/6"));
    CHECK(P("z").divide_by_z() == P("1"));
    CHECK_THROWS_AS(P("1").divide_by_z(), DivisibilityError);

    const CoeffPoly a1 = P("(mu-1)*z^2/6 + z^6/72");
    CHECK(a1.substitute_param(-mu) == P("(-mu-1)*z^2/6 + z^6/72"));
    CHECK(a1.substitute_param(-mu).substitute_param(-mu) == a1);

    CHECK(P("1").evaluate<double>({0.3, 0.1}, {7.0, -2.0}) == std::complex<double>(1.0, 0.0));
    CHECK(P("z^3/6").evaluate<double>({0.0, 0.0}, {2.0, 0.0}).real() == doctest::Approx(4.0 / 3.0));
    // -0.5/6 + 1/72
    CHECK(a1.evaluate<double>({0.5, 0.0}, {1.0, 0.0}).real() == doctest::Approx(-0.5 / 6.0 + 1.0 / 72.0));
}

TEST_CASE("declared parity is enforced") {
    CHECK_THROWS_AS(CoeffPoly({ParamPoly(1), ParamPoly(1)}, Parity::Even), ParityError);
    CHECK_THROWS_AS(P("z^2 + 1").with_parity(Parity::Odd), ParityError);
    CHECK((P("z") * P("z^3")).parity() == Parity::Even);
    CHECK((P("z") * P("z^2")).parity() == Parity::Odd);
    CHECK(P("z^2").derivative().parity() == Parity::Odd);
    CHECK(P("z2") == P("z^2"));
}

TEST_CASE("ring laws on random instances") {
    RandomPolys gen;
    for (int trial = 0; trial < 40; ++trial) {
        const CoeffPoly x = gen.coeff_poly();
        const CoeffPoly y = gen.coeff_poly();
        const CoeffPoly w = gen.coeff_poly();
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK(x + y == y + x);
        CHECK(x.integrate_from_zero().derivative() == x);
        const ParamPoly p = gen.param_poly();
        const ParamPoly r = gen.param_poly();
        CHECK((p * r).substitute(-mu) == p.substitute(-mu) * r.substitute(-mu));
    }
}

TEST_CASE("truncated series products match truncated polynomial products") {
    RandomPolys gen;
    for (int order = 0; order <= 8; ++order) {
        std::vector<CoeffPoly> ca, cb;
        for (int k = 0; k <= order; ++k) {
            ca.push_back(gen.coeff_poly(2));
            cb.push_back(gen.coeff_poly(2));
        }
        const TruncSeries sa(SeriesVar::S, order, ca);
        const TruncSeries sb(SeriesVar::S, order, cb);
        const TruncSeries prod = sa * sb;
        for (int n = 0; n <= order; ++n) {
            CoeffPoly want;
            for (int k = 0; k <= n; ++k) want += ca[k] * cb[n - k];
            CHECK(prod.coeff(n) == want);
        }
    }
}

TEST_CASE("series exp, log, pow and reciprocal") {
    const int n = 8;
    const TruncSeries s = TruncSeries::variable(SeriesVar::S, n);
    const TruncSeries e = s.exp();
    BigRational fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        CHECK(e.coeff(k) == CoeffPoly(ParamPoly(BigRational(1) / fact)));
    }
    CHECK(e.log() == s);
    CHECK(e * e.reciprocal() == TruncSeries::constant(SeriesVar::S, n, ParamPoly(1)));

    // (1+s)^b: coefficients are binomial(b, k)
    const TruncSeries one_plus = TruncSeries::constant(SeriesVar::S, n, ParamPoly(1)) + s;
    const TruncSeries pw = one_plus.pow(b);
    for (int k = 0; k <= n; ++k) CHECK(pw.coeff(k) == CoeffPoly(binomial(b, k)));

    CHECK_THROWS_AS(one_plus.exp(), SeriesDomainError);
    CHECK_THROWS_AS(s.log(), SeriesDomainError);
    CHECK(pw.truncated(3).order() == 3);
}

TEST_CASE("expression parser") {
    CHECK(parse_param_poly("1 - b/2") == ParamPoly(1) - b * ParamPoly(q(1, 2)));
    CHECK(parse_param_poly("2-b") == ParamPoly(2) - b);
    CHECK(parse_param_poly("0.25*mu") == mu * ParamPoly(q(1, 4)));
    CHECK(P("(z+1)^2") == P("z^2 + 2z + 1"));
    CHECK_THROWS_AS(parse_param_poly("z+1"), ParseError);
    CHECK_THROWS_AS(P("z/z"), ParseError);
    CHECK_THROWS_AS(P("x+1"), ParseError);
    CHECK_THROWS_AS(P("mu+b"), MixedParameterError);
}

TEST_CASE("JSON layout") {
    const CoeffPoly a1 = P("(mu-1)*z^2/6 + z^6/72");
    const Json j = to_json(a1);
    CHECK(j.dump() == R"([[],[],["-1/6","1/6"],[],[],[],["1/72"]])");
    CHECK(coeff_poly_from_json(j, Param::Mu) == a1);
    CHECK(to_json(CoeffPoly()).dump() == "[]");
}
