#include "kasym/temme/identities.hpp"

#include <algorithm>
#include <functional>

#include "kasym/errors.hpp"
#include "kasym/olver/coefficients.hpp"
#include "kasym/ratpoly/parse.hpp"
#include "kasym/temme/coefficients.hpp"

namespace kasym::temme {
namespace {

using olver::CoefficientTable;
using ratpoly::BigRational;
using ratpoly::Param;
using ratpoly::Parity;
using ratpoly::SeriesVar;

std::string upto(const char* var, int n) { return std::string(var) + "<=" + std::to_string(n) + ", exact"; }

// Runs a check, turning thrown library errors into a failed result.
IdentityResult run(const std::string& name, const std::string& scope, const std::function<std::string()>& body) {
    IdentityResult r{name, false, scope, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const Error& e) {
        r.detail = e.kind() + ": " + e.what();
    }
    return r;
}

const ParamPoly& mu() {
    static const ParamPoly v = ParamPoly::variable(Param::Mu);
    return v;
}
const ParamPoly& bvar() {
    static const ParamPoly v = ParamPoly::variable(Param::B);
    return v;
}
ParamPoly mu_as_b() { return bvar() - ParamPoly(1, Param::B); }

ParamPoly slope_at_zero(const CoeffPoly& p) { return p.coeff(1); }

}  // namespace

std::vector<IdentityResult> run_identity_suite(int n_max) {
    if (n_max < 0) throw PreconditionError("identity suite needs n_max >= 0");
    const int order = std::max(10, n_max + 1);
    const CoefficientTable table = olver::compute_coefficient_table(olver::confluent_f(), order);
    const auto lowered = olver::lower_coefficients(table);
    std::vector<IdentityResult> out;

    out.push_back(run("recursion", upto("s", order), [&] {
        const auto f = olver::check_recursion(table.f, table.A, table.B, Param::Mu);
        return f.empty() ? std::string() : f.front();
    }));

    out.push_back(run("parity", upto("s", order), [&]() -> std::string {
        for (int s = 0; s <= order; ++s) {
            if (table.A[s].actual_parity() != Parity::Even) return "A_" + std::to_string(s) + " not even";
            if (table.B[s].actual_parity() != Parity::Odd) return "B_" + std::to_string(s) + " not odd";
            if (lowered.a[s].actual_parity() != Parity::Even) return "a_" + std::to_string(s) + " not even";
            if (lowered.b[s].actual_parity() != Parity::Odd) return "b_" + std::to_string(s) + " not odd";
        }
        return {};
    }));

    out.push_back(run("normalization", upto("s", order), [&]() -> std::string {
        if (!(table.A[0] == CoeffPoly(ParamPoly(1)))) return "A_0 != 1";
        for (int s = 1; s <= order; ++s) {
            if (!table.A[s].at_zero().is_zero()) return "A_" + std::to_string(s) + "(0) != 0";
        }
        return {};
    }));

    out.push_back(run("lowered-identities", upto("s", order), [&]() -> std::string {
        for (int s = 0; s <= order; ++s) {
            CoeffPoly a = table.A[s];
            CoeffPoly b = table.B[s];
            for (int r = 0; r < s; ++r) {
                const ParamPoly w = mu().scaled(2) * slope_at_zero(table.B[s - 1 - r]).substitute(-mu());
                a += table.A[r].scaled(w);
                b += table.B[r].scaled(w);
            }
            if (!(a == lowered.a[s])) return "a_" + std::to_string(s) + " mismatch";
            if (!(b == lowered.b[s])) return "b_" + std::to_string(s) + " mismatch";
        }
        return {};
    }));

    out.push_back(run("lowered-recursion", upto("s", order), [&] {
        const auto f = olver::check_recursion(table.f, lowered.a, lowered.b, Param::Mu);
        return f.empty() ? std::string() : f.front();
    }));

    out.push_back(run("reciprocal-law", "through u^-" + std::to_string(2 * order) + ", exact", [&]() -> std::string {
        const auto prod = olver::normalizer_series(table, 1, order) * olver::normalizer_series(table, -1, order);
        if (!(prod == TruncSeries::constant(SeriesVar::InvU2, order, CoeffPoly(ParamPoly(1))))) {
            return "F(u,mu) F(u,-mu) != 1";
        }
        return {};
    }));

    out.push_back(run("basis-shift", upto("s", order), [&]() -> std::string {
        const std::vector<ParamPoly> seeds{ParamPoly(1), ratpoly::parse_param_poly("mu/2"), ParamPoly(3),
                                           ratpoly::parse_param_poly("mu^2 - 1")};
        const auto sh = olver::shift_basis(table, seeds);
        for (int s = 0; s <= order; ++s) {
            const ParamPoly want = s < static_cast<int>(seeds.size()) ? seeds[s] : ParamPoly(0);
            if (!(sh.A[s].at_zero() == want)) return "shifted A_" + std::to_string(s) + "(0) != seed";
        }
        const auto f = olver::check_recursion(table.f, sh.A, sh.B, Param::Mu);
        return f.empty() ? std::string() : f.front();
    }));

    const TemmeTable tt = compute_temme_table(n_max);
    out.push_back(run("temme-agreement", upto("n", n_max), [&]() -> std::string {
        for (int n = 0; n <= n_max; ++n) {
            if (!(lowered.a[n].substitute_param(mu_as_b()) == tt.adagger[n])) return "a_" + std::to_string(n);
            if (!(lowered.b[n].substitute_param(mu_as_b()) == tt.bdagger[n])) return "b_" + std::to_string(n);
        }
        return {};
    }));

    out.push_back(run("temme-pde", upto("k", static_cast<int>(tt.base.size()) - 2), [&]() -> std::string {
        const CoeffPoly zz = CoeffPoly::monomial(ParamPoly(1), 2);
        const CoeffPoly four_z = CoeffPoly::monomial(ParamPoly(4), 1);
        const CoeffPoly two_b_minus_one(bvar().scaled(2) - ParamPoly(1, Param::B));
        for (std::size_t k = 0; k + 1 < tt.base.size(); ++k) {
            const CoeffPoly& ck = tt.base[k];
            const CoeffPoly& c1 = tt.base[k + 1];
            const CoeffPoly lhs = c1.scaled(BigRational(4 * static_cast<long>(k + 1))) + four_z * c1.derivative();
            const CoeffPoly rhs = ck.derivative().derivative() + two_b_minus_one * ck.derivative().divide_by_z() -
                                  zz * ck;
            if (!(lhs == rhs)) return "c_" + std::to_string(k);
        }
        return {};
    }));

    out.push_back(run("temme-parity", upto("k", static_cast<int>(tt.base.size()) - 1), [&]() -> std::string {
        for (std::size_t k = 0; k < tt.base.size(); ++k) {
            if (tt.base[k].actual_parity() != Parity::Even) return "c_" + std::to_string(k) + " not even";
            if (k % 2 == 1 && !tt.base[k].at_zero().is_zero()) return "c_" + std::to_string(k) + "(0) != 0";
        }
        return {};
    }));

    const GammaRatioCoefficients g = gamma_ratio_coefficients(n_max + 1);
    out.push_back(run("gamma-ratio-odd-zero", upto("n", n_max + 1), [&]() -> std::string {
        for (int n = 1; n <= n_max + 1; n += 2) {
            if (!g.d[n].is_zero()) return "d_" + std::to_string(n) + " != 0";
        }
        return {};
    }));

    const ParamPoly one_minus_b = ParamPoly(1, Param::B) - bvar();
    out.push_back(run("slope-bridge", upto("n", n_max), [&]() -> std::string {
        for (int n = 0; n <= n_max; ++n) {
            const ParamPoly lhs = slope_at_zero(table.B[n]).substitute(mu_as_b());
            const ParamPoly rhs = g.d[n + 1].divide_exact(one_minus_b).scaled(BigRational(1, 2));
            if (!(lhs == rhs)) return "B_" + std::to_string(n) + "'(0)";
        }
        return {};
    }));

    out.push_back(run("lowered-value-bridge", upto("n", n_max), [&]() -> std::string {
        for (int n = 0; n <= n_max; ++n) {
            if (!(lowered.a[n].at_zero().substitute(mu_as_b()) == g.dtilde[n])) {
                return "a_" + std::to_string(n) + "(0)";
            }
            const ParamPoly slope = slope_at_zero(lowered.b[n]).substitute(mu_as_b());
            if (!(slope == g.dtilde[n + 1].divide_exact(one_minus_b).scaled(BigRational(-1, 2)))) {
                return "b_" + std::to_string(n) + "'(0)";
            }
        }
        return {};
    }));

    out.push_back(run("bernoulli-generating-function", upto("n", n_max), [&]() -> std::string {
        // t G' = G (ell (1 - t e^t/(e^t - 1)) + x t) with t e^t/(e^t-1) = t/(e^t-1) + t
        const std::vector<std::pair<ParamPoly, ParamPoly>> cases{
            {ParamPoly(2, Param::B) - bvar(), ParamPoly(1, Param::B) - bvar().scaled(BigRational(1, 2))},
            {bvar(), bvar().scaled(BigRational(1, 2))},
            {ParamPoly(3), ParamPoly(BigRational(-1, 3))}};
        for (const auto& [ell, x] : cases) {
            const auto bn = generalized_bernoulli(n_max, ell, x);
            std::vector<CoeffPoly> gc, tdg;
            BigRational fact = 1;
            for (int n = 0; n <= n_max; ++n) {
                if (n > 0) fact *= n;
                gc.push_back(CoeffPoly(bn[n].scaled(BigRational(1) / fact)));
                tdg.push_back(CoeffPoly(bn[n].scaled(BigRational(n) / fact)));
            }
            const TruncSeries G(SeriesVar::S, n_max, gc);
            std::vector<CoeffPoly> kc;
            BigRational f2 = 1;
            for (int k = 0; k <= n_max; ++k) {
                f2 *= k + 1;
                kc.push_back(CoeffPoly(ParamPoly(BigRational(1) / f2)));
            }
            const TruncSeries kernel = TruncSeries(SeriesVar::S, n_max, kc).reciprocal();
            const TruncSeries t = TruncSeries::variable(SeriesVar::S, n_max);
            const TruncSeries one = TruncSeries::constant(SeriesVar::S, n_max, CoeffPoly(ParamPoly(1)));
            const TruncSeries factor = (one - kernel - t).scaled(CoeffPoly(ell)) + t.scaled(CoeffPoly(x));
            if (!(G * factor == TruncSeries(SeriesVar::S, n_max, tdg))) return "ell=" + ell.to_string();
        }
        return {};
    }));

    return out;
}

}  // namespace kasym::temme
