#include <doctest.h>

#include "kasym/errors.hpp"
#include "kasym/olver/coefficients.hpp"
#include "kasym/ratpoly/parse.hpp"

using namespace kasym::olver;
using kasym::ratpoly::parse_coeff_poly;
using kasym::ratpoly::parse_param_poly;

namespace {

CoeffPoly P(std::string_view s) { return parse_coeff_poly(s); }

const CoefficientTable& table10() {
    static const CoefficientTable t = compute_coefficient_table(confluent_f(), 10);
    return t;
}

}  // namespace

TEST_CASE("leading coefficients for f = z^2") {
    const auto& t = table10();
    CHECK(t.A.size() == 11);
    CHECK(t.B.size() == 11);
    CHECK(t.A[0] == P("1"));
    CHECK(t.B[0] == P("z^3/6"));
    CHECK(t.A[1] == P("(mu-1)*z^2/6 + z^6/72"));
}

TEST_CASE("higher coefficients match an independent symbolic computation") {
    // Produced by direct symbolic integration of the recursion in a CAS.
    const auto& t = table10();
    CHECK(t.B[1] == P("z^9/1296 - z^5/15 + (1/3 - mu^2/3)*z"));
    CHECK(t.A[2] == P("z^12/31104 + (mu/1296 - 47/6480)*z^8 + (-mu^2/24 - mu/15 + 7/40)*z^4"));
    CHECK(t.B[2] == P("z^15/933120 - 7*z^11/12960 + (2071/45360 - 5*mu^2/1296)*z^7"
                      " + (mu^3/18 + mu^2/5 - mu/18 - 7/15)*z^3"));
    CHECK(t.A[3] == P("z^18/33592320 + (mu/933120 - 5/186624)*z^14"
                      " + (-mu^2/5184 - 7*mu/12960 + 1507/302400)*z^10"
                      " + (mu^3/1296 + 61*mu^2/2160 + 1861*mu/45360 - 2659/15120)*z^6"
                      " + (mu^4/18 + 13*mu^3/90 - 23*mu^2/90 - 37*mu/90 + 7/15)*z^2"));
}

TEST_CASE("table invariants") {
    const auto& t = table10();
    for (int s = 0; s <= t.order; ++s) {
        CHECK(t.A[s].parity() == kasym::ratpoly::Parity::Even);
        CHECK(t.B[s].parity() == kasym::ratpoly::Parity::Odd);
        if (s > 0) CHECK(t.A[s].at_zero().is_zero());
    }
    CHECK(check_recursion(t.f, t.A, t.B, Param::Mu).empty());

    // a perturbed table is caught
    auto bad = t.B;
    bad[3] = bad[3] + P("z");
    CHECK_FALSE(check_recursion(t.f, t.A, bad, Param::Mu).empty());
}

TEST_CASE("general even f and parameter choice") {
    const CoefficientTable t = compute_coefficient_table(P("z^4 - 3*z^2"), 4);
    CHECK(check_recursion(t.f, t.A, t.B, Param::Mu).empty());
    CHECK(t.B[0] == P("z^5/10 - z^3/2"));
    CHECK_THROWS_AS(compute_coefficient_table(P("z^3"), 2), kasym::ParityError);

    const CoefficientTable tb = compute_coefficient_table(confluent_f(), 3, Param::B);
    CHECK(tb.A[1] == P("(b-2)*z^2/6 + z^6/72"));
    CHECK(check_recursion(tb.f, tb.A, tb.B, Param::B).empty());
}

TEST_CASE("lowered coefficients") {
    const auto low = lower_coefficients(table10());
    CHECK(low.a[0] == P("1"));
    CHECK(low.b[0] == P("z^3/6"));
    CHECK(low.a[1] == P("(mu-1)*z^2/6 + z^6/72"));
    CHECK(low.a.size() == 11);
    CHECK(low.b.size() == 11);
    CHECK(check_recursion(table10().f, low.a, low.b, Param::Mu).empty());
}

TEST_CASE("normalizer series") {
    const auto& t = table10();
    const TruncSeries fp = normalizer_series(t, 1, 9);
    const TruncSeries fm = normalizer_series(t, -1, 9);
    CHECK(fp.coeff(0) == P("1"));
    CHECK(fp.coeff(1).is_zero());
    // B_1'(0) = 1/3 - mu^2/3
    CHECK(fp.coeff(2) == P("-2*mu*(1/3 - mu^2/3)"));
    const TruncSeries prod = fp * fm;
    CHECK(prod == TruncSeries::constant(kasym::ratpoly::SeriesVar::InvU2, 9, P("1")));
    CHECK_THROWS_AS(normalizer_series(t, 1, 12), kasym::PreconditionError);
}

TEST_CASE("basis shift") {
    const auto& t = table10();
    const ShiftedBasis same = shift_basis(t, {ParamPoly(1)});
    CHECK(same.A == t.A);
    CHECK(same.B == t.B);

    const ShiftedBasis one = shift_basis(t, {ParamPoly(1), ParamPoly(1)});
    CHECK(one.A[1] == t.A[1] + P("1"));
    CHECK(one.B[1] == t.B[1] + t.B[0]);

    const std::vector<ParamPoly> seeds{ParamPoly(1), parse_param_poly("mu/2"), ParamPoly(3), parse_param_poly("mu^2")};
    const ShiftedBasis sh = shift_basis(t, seeds);
    for (int s = 0; s <= t.order; ++s) {
        const ParamPoly want = s < 4 ? seeds[s] : ParamPoly(0);
        CHECK(sh.A[s].at_zero() == want);
    }
    CHECK(check_recursion(t.f, sh.A, sh.B, Param::Mu).empty());
    CHECK_THROWS_AS(shift_basis(t, {ParamPoly(2)}), kasym::InvalidSeedError);
}
