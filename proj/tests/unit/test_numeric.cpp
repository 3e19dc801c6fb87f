#include <doctest.h>

#include <cmath>
#include <string>

#include "kasym/numeric/double_double.hpp"
#include "kasym/numeric/log_complex.hpp"
#include "kasym/numeric/precision.hpp"
#include "kasym/numeric/quadrature.hpp"
#include "kasym/numeric/riemann_point.hpp"
#include "kasym/numeric/scalar.hpp"

using namespace kasym::numeric;

namespace {

// Reference values below were produced with mpmath at 40 digits.
double rel(const DD& got, const char* want) {
    const DD w = parse_double_double(want);
    return static_cast<double>(abs((got - w) / w));
}

}  // namespace

TEST_CASE("double-double elementary functions against 40-digit references") {
    CHECK(rel(exp(DD(2.5)), "12.1824939607034734380701759511679662") < 1e-30);
    CHECK(rel(exp(DD(-30.25)), "7.28772409581969241934317748697794595e-14") < 1e-30);
    CHECK(rel(log(DD(7.125)), "1.96360972615471422315257630443584954") < 1e-30);
    CHECK(rel(sin(DD(100.5)), "-0.0309599667832713447429753125337393462") < 1e-29);
    CHECK(rel(cos(DD(-3.75)), "-0.820559357339560722583112402290711047") < 1e-30);
    CHECK(rel(atan2(parse_double_double("-0.3"), DD(-2.0)), "-2.9927027059802959878761129916236356") < 1e-30);
    CHECK(rel(expm1(parse_double_double("1e-10")), "1.00000000005000000000166666666670833e-10") < 1e-30);
    CHECK(rel(log1p(parse_double_double("-2.5e-5")), "-2.50003125052084309915364990243094499e-5") < 1e-30);
    CHECK(rel(sinh(DD(0.125)), "0.125325775241115456982057542291371568") < 1e-30);
    CHECK(rel(sqrt(DD(3.0)), "1.73205080756887729352744634150587237") < 1e-31);
}

TEST_CASE("double-double constants and round trips") {
    const DD pi = ScalarTraits<DD>::pi();
    CHECK(static_cast<double>(abs(atan2(DD(0.0), DD(-1.0)) - pi)) < 1e-31);
    CHECK(static_cast<double>(abs(sin(pi))) < 1e-31);
    CHECK(static_cast<double>(abs(exp(ScalarTraits<DD>::ln2()) - 2.0)) < 1e-31);
    const DD x = parse_double_double("0.1234567890123456789012345678901");
    CHECK(static_cast<double>(abs(log(exp(x)) - x)) < 1e-31);
    CHECK(to_string(parse_double_double("-1.5e3"), 5) == "-1.5000e3");
    CHECK(static_cast<double>(abs(parse_double_double(to_string(x)) - x)) < 1e-32);
}

TEST_CASE("sin_pi and cos_pi reduce exactly") {
    CHECK(sin_pi(1.0) == 0.0);
    CHECK(cos_pi(0.5) == 0.0);
    CHECK(sin_pi(0.5) == doctest::Approx(1.0));
    CHECK(static_cast<double>(abs(sin_pi(DD(1e6) + 0.25) - sqrt(DD(0.5)))) < 1e-30);
}

TEST_CASE("LogComplex arithmetic tracks phase") {
    using LC = LogComplex<double>;
    const LC a = LC::from_complex({3.0, 4.0});
    CHECK(a.logmag() == doctest::Approx(std::log(5.0)));
    const LC big = LC::from_log(800.0, 0.0);
    const LC prod = big * big;
    CHECK(prod.logmag() == doctest::Approx(1600.0));
    CHECK_FALSE(prod.representable());

    const LC w = LC::from_log(0.0, 3.0) * LC::from_log(0.0, 4.0);
    CHECK(w.phase() == doctest::Approx(7.0));  // no reduction

    const LC s = a + LC::from_complex({-3.0, -4.0});
    CHECK((s.is_zero() || s.logmag() < -30.0));
    const auto sum = (a + LC::from_complex({1.0, -1.0})).to_complex();
    CHECK(sum.real() == doctest::Approx(4.0));
    CHECK(sum.imag() == doctest::Approx(3.0));

    CHECK(relative_discrepancy(LC::from_log(10.0, 2.0 * M_PI), LC::from_log(10.0, 0.0)) < 1e-15);
    const double d = relative_discrepancy(LC::from_log(1e-9, 0.0), LC::one());
    CHECK(d == doctest::Approx(1e-9).epsilon(1e-6));
}

TEST_CASE("RiemannPoint keeps winding") {
    const RiemannPoint<double> z(2.0, 2.5 * M_PI);
    CHECK(z.squared().theta() == doctest::Approx(5.0 * M_PI));
    CHECK(z.to_complex().imag() == doctest::Approx(2.0));
    CHECK_THROWS_AS(RiemannPoint<double>(0.0, 1.0), kasym::PreconditionError);
}

TEST_CASE("Gauss-Kronrod rule integrates x^22 exactly") {
    const auto& rule = gauss_kronrod15<DD>();
    DD sum = rule.wk[7] * 0.0;
    DD total_weight = rule.wk[7];
    for (std::size_t i = 0; i < 7; ++i) {
        DD p = 1.0;
        for (int k = 0; k < 22; ++k) p *= rule.x[i];
        sum += rule.wk[i] * p * 2.0;
        total_weight += rule.wk[i] * 2.0;
    }
    CHECK(static_cast<double>(abs(sum - DD(2.0) / 23.0)) < 1e-30);
    CHECK(static_cast<double>(abs(total_weight - 2.0)) < 1e-30);
    // classic double tables
    CHECK(gauss_kronrod15<double>().x[0] == doctest::Approx(0.991455371120812639206854697526329));
    CHECK(gauss_kronrod15<double>().wk[7] == doctest::Approx(0.209482141084727828012999174891714));
    CHECK(gauss_kronrod15<double>().wg[3] == doctest::Approx(0.417959183673469387755102040816327));
}

TEST_CASE("adaptive quadrature of a peaked integrand") {
    auto f = [](const DD& t) { return Complex<DD>(exp(-DD(400.0) * (t - 0.5) * (t - 0.5)), DD(0.0)); };
    const auto res = integrate_adaptive<DD>(f, DD(0.0), DD(1.0), DD(1e-28), DD(1e-40));
    const DD want = sqrt(ScalarTraits<DD>::pi() / 400.0);  // tails below e^-100
    CHECK(static_cast<double>(abs((res.value.real() - want) / want)) < 1e-26);
}

TEST_CASE("precision modes") {
    CHECK(parse_precision_mode("dd") == PrecisionMode::DoubleDouble);
    CHECK_THROWS_AS(parse_precision_mode("quad"), kasym::ParseError);
    CHECK(Precision::for_mode(PrecisionMode::Double).series_tol > 1e-18);
}
