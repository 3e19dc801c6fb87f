#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "kasym/errors.hpp"
#include "kasym/expansion/expansion.hpp"

using namespace kasym::expansion;
using kasym::numeric::PrecisionMode;
using cplx = std::complex<double>;

namespace {

const double kPi = 3.14159265358979323846;

const Coefficients& coeffs() {
    static const Coefficients c = Coefficients::compute(4);
    return c;
}

ExpansionConfig cfg(Variant v, double theta = 0.0, int N = 3, double t = 20.0) {
    ExpansionConfig c;
    c.variant = v;
    c.z = Point(1.0, theta);
    c.N = N;
    c.t = t;
    return c;
}

double disc(const ExpansionConfig& c) { return eval_sides(c, coeffs()).rel_discrepancy; }

double rel(const Value& a, const Value& b) { return kasym::numeric::relative_discrepancy(a, b); }

// log-log slope from the end points of t in {10, 20, 40}
double slope(ExpansionConfig c) {
    c.t = 10;
    const double d10 = disc(c);
    c.t = 40;
    return std::log(disc(c) / d10) / std::log(4.0);
}

}  // namespace

TEST_CASE("variant names") {
    for (Variant v : {Variant::M, Variant::UCapital, Variant::ULower}) CHECK(parse_variant(to_string(v)) == v);
    CHECK_THROWS_AS(parse_variant("U"), kasym::ParseError);
}

TEST_CASE("config validation") {
    ExpansionConfig c = cfg(Variant::M);
    c.N = 0;
    CHECK_THROWS_AS(c.validate(), kasym::PreconditionError);
    c = cfg(Variant::M);
    c.b = -2.0;
    CHECK_THROWS_AS(c.validate(), kasym::PreconditionError);
    c.b = 0.0;
    CHECK_THROWS_AS(c.validate(), kasym::PreconditionError);
    c.b = -1.5;
    CHECK_NOTHROW(c.validate());
    c = cfg(Variant::ULower);
    c.u_theta = kPi / 2;
    CHECK_THROWS_AS(c.validate(), kasym::PreconditionError);
    c = cfg(Variant::UCapital);
    c.t = 1;
    c.b = -3.0;  // Re a = 1/4 - 3/2 < 0
    CHECK_THROWS_AS(c.validate(), kasym::PreconditionError);
    CHECK_THROWS_AS(eval_m_sides(cfg(Variant::ULower), coeffs()), kasym::PreconditionError);
    CHECK_THROWS_AS(eval_u_sides(cfg(Variant::M), coeffs()), kasym::PreconditionError);
    CHECK_THROWS_AS(eval_sides(cfg(Variant::M, 0, 5), coeffs()), kasym::PreconditionError);
}

TEST_CASE("sides against frozen values") {
    // frozen mpmath values at b = 3/2, z = 1, u = 20; the N = 1 right-hand
    // sides use A_0 = 1, B_0 = z^3/6
    const SideBySide m = eval_sides(cfg(Variant::M, 0, 1), coeffs());
    CHECK(rel(m.lhs, Value::from_log(17.590930913042552412596, 0)) < 1e-14);
    CHECK(rel(m.rhs, Value::from_log(17.59108082429232202412384, 0)) < 1e-14);
    const SideBySide uc = eval_sides(cfg(Variant::UCapital, 0, 1), coeffs());
    CHECK(rel(uc.lhs, Value::from_log(-21.28106191473183023530206, 0)) < 1e-12);
    CHECK(rel(uc.rhs, Value::from_log(-21.28086329016534737583732, 0)) < 1e-14);
    const SideBySide ul = eval_sides(cfg(Variant::ULower, 0, 1), coeffs());
    CHECK(rel(ul.lhs, Value::from_log(-21.28106035225624305688594, 0)) < 1e-12);
}

TEST_CASE("M expansion accuracy") {
    CHECK(disc(cfg(Variant::M)) < 1e-6);
    CHECK(disc(cfg(Variant::M, 2 * kPi)) < 1e-5);
    CHECK(eval_m_sides(cfg(Variant::M)).rel_discrepancy == doctest::Approx(disc(cfg(Variant::M))));
    for (int N : {1, 2, 3}) {
        INFO("N = " << N);
        // next omitted term: ratio 2^{2N} within a factor 2
        ExpansionConfig c = cfg(Variant::M, 0, N);
        const double d20 = disc(c);
        c.t = 40;
        const double ratio = d20 / disc(c);
        const double expected = std::pow(2.0, 2 * N);
        CHECK(ratio > expected / 2);
        CHECK(ratio < expected * 2);
        CHECK(std::abs(slope(cfg(Variant::M, 0, N)) + 2 * N) < 0.2 * N);
    }
}

TEST_CASE("U expansion accuracy") {
    CHECK(disc(cfg(Variant::ULower)) < 1e-5);
    CHECK(disc(cfg(Variant::UCapital)) < 1e-5);
    CHECK(disc(cfg(Variant::UCapital, 2 * kPi, 2)) < 1e-4);
    CHECK(disc(cfg(Variant::ULower, 2 * kPi, 2)) < 1e-4);
    for (int N : {1, 2, 3}) {
        for (Variant v : {Variant::UCapital, Variant::ULower}) {
            INFO("N = " << N << " variant = " << to_string(v));
            CHECK(std::abs(slope(cfg(v, 0, N)) + 2 * N) < 0.2 * N);
        }
    }
    // both variants approximate the same function
    const SideBySide cap = eval_sides(cfg(Variant::UCapital), coeffs());
    const SideBySide low = eval_sides(cfg(Variant::ULower), coeffs());
    const double bound = std::max(cap.rel_discrepancy, low.rel_discrepancy);
    CHECK(rel(cap.rhs / cap.lhs, low.rhs / low.lhs) <= 2 * bound);
}

TEST_CASE("unrestricted arg z") {
    for (double theta : {kPi, 2 * kPi, 2.5 * kPi}) {
        for (Variant v : {Variant::UCapital, Variant::ULower}) {
            INFO("theta = " << theta << " variant = " << to_string(v));
            double previous = 1.0;
            for (int N : {1, 2, 3}) {
                const double d = disc(cfg(v, theta, N));
                if (N == 2) CHECK(d < 1e-4);
                CHECK(d < previous);
                previous = d;
            }
        }
    }
}

TEST_CASE("complex u and complex b") {
    ExpansionConfig c = cfg(Variant::ULower, 2.5 * kPi);
    c.u_theta = 0.3;
    CHECK(disc(c) < 1e-6);
    c = cfg(Variant::M, kPi);
    c.u_theta = -0.3;
    CHECK(disc(c) < 1e-6);
    for (Variant v : {Variant::M, Variant::UCapital, Variant::ULower}) {
        ExpansionConfig d = cfg(v, 0.0);
        d.b = cplx(1.2, 0.5);
        INFO("variant = " << to_string(v));
        CHECK(disc(d) < 1e-4);
    }
}

TEST_CASE("double mode") {
    for (Variant v : {Variant::M, Variant::UCapital, Variant::ULower}) {
        ExpansionConfig c = cfg(v, 2 * kPi);
        c.prec = kasym::numeric::Precision::for_mode(PrecisionMode::Double);
        const double d_double = disc(c);
        c.prec = {};
        INFO("variant = " << to_string(v));
        CHECK(std::abs(d_double - disc(c)) < 1e-7);
    }
}

TEST_CASE("M winding") {
    for (double theta : {0.0, 0.7, kPi, 2.5 * kPi}) {
        for (double b : {0.7, 1.5, 2.5}) {
            ExpansionConfig c = cfg(Variant::M, theta);
            c.b = b;
            INFO("theta = " << theta << " b = " << b);
            CHECK(m_winding_residual(c, coeffs()) < 1e-8);
        }
    }
}

TEST_CASE("gamma ratio") {
    for (double u : {3.0, 20.0, 1e3}) {
        for (int N : {0, 3}) CHECK(gamma_ratio_check(2.0, u, N).rel_discrepancy == 0.0);
    }
    CHECK(gamma_ratio_check(1.5, 20, 3).rel_discrepancy < 1e-10);
    // b = 3: the ratio is 1/(1 - 4/u^4), so the remainder after u^{-8} is (4/u^4)^3
    CHECK(gamma_ratio_check(3.0, 20, 4).rel_discrepancy == doctest::Approx(std::pow(4.0 / 160000, 3)).epsilon(1e-3));
    CHECK(gamma_ratio_check(cplx(1.2, 0.5), 20, 3).rel_discrepancy < 1e-10);
    // odd N: the first omitted term is u^{-2N-2}
    for (int N : {1, 3}) {
        const double d20 = gamma_ratio_check(1.5, 20, N).rel_discrepancy;
        const double d40 = gamma_ratio_check(1.5, 40, N).rel_discrepancy;
        const double ratio = d20 / d40;
        const double expected = std::pow(2.0, 2 * N + 2);
        INFO("N = " << N);
        CHECK(ratio > expected / 2);
        CHECK(ratio < expected * 2);
    }
    // even N: d_{N+1} vanishes, so the remainder starts at u^{-2N-4}
    const double r2 = gamma_ratio_check(1.5, 20, 2).rel_discrepancy / gamma_ratio_check(1.5, 40, 2).rel_discrepancy;
    CHECK(r2 > std::pow(2.0, 8) / 2);
    CHECK(r2 < std::pow(2.0, 8) * 2);
    CHECK_THROWS_AS(gamma_ratio_check(1.5, -1, 3), kasym::PreconditionError);
}

TEST_CASE("decay sweep") {
    std::vector<ExpansionConfig> grid;
    for (int N : {1, 2}) {
        for (double t : {10.0, 20.0, 40.0}) {
            ExpansionConfig c = cfg(N == 1 ? Variant::M : Variant::ULower, 0, N, t);
            grid.push_back(c);
        }
    }
    ExpansionConfig bad = cfg(Variant::ULower);
    bad.u_theta = 2.0;
    grid.push_back(bad);

    const SweepResult r = decay_sweep(grid, 1);
    REQUIRE(r.rows.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(r.rows[i].cfg.t == grid[i].t);
    CHECK(r.rows.back().status == "precondition");
    CHECK_FALSE(r.rows.back().sides.has_value());
    REQUIRE(r.fits.size() == 2);
    CHECK(r.fits[0].variant == Variant::M);
    CHECK(r.fits[0].points == 3);
    CHECK(std::abs(r.fits[0].slope + 2) < 0.2);
    CHECK(r.fits[1].variant == Variant::ULower);
    CHECK(std::abs(r.fits[1].slope + 4) < 0.4);

    // concurrent evaluation gives the same rows in the same order
    const SweepResult p = decay_sweep(grid, 4);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        CHECK(p.rows[i].sides->rel_discrepancy == r.rows[i].sides->rel_discrepancy);
    }

    const SweepResult one = decay_sweep({cfg(Variant::M)}, 1);
    CHECK(one.rows.size() == 1);
    CHECK(one.fits.empty());
    CHECK_THROWS_AS(decay_sweep({}, 1), kasym::PreconditionError);
}

TEST_CASE("acceptance grid") {
    const auto grid = acceptance_grid(Variant::M, {});
    CHECK(grid.size() == 3 * 3 * 4 * 2 * 3 * 3);
    CHECK(grid[0].t == 10);
    CHECK(grid[1].t == 20);
    CHECK(grid[3].N == 2);
}

TEST_CASE("fit slope") {
    CHECK(fit_slope({0, 1, 2}, {1, 3, 5}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(fit_slope({1}, {1}), kasym::PreconditionError);
    CHECK_THROWS_AS(fit_slope({1, 1}, {1, 2}), kasym::PreconditionError);
}
