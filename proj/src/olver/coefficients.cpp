#include "kasym/olver/coefficients.hpp"

#include "kasym/errors.hpp"

namespace kasym::olver {
namespace {

using ratpoly::BigRational;
using ratpoly::Parity;

const ParamPoly& mu() {
    static const ParamPoly v = ParamPoly::variable(Param::Mu);
    return v;
}

ParamPoly b_to_mu() { return mu() + ParamPoly(1); }                     // b = mu + 1
ParamPoly mu_to_b() { return ParamPoly::variable(Param::B) - ParamPoly(1, Param::B); }  // mu = b - 1

CoeffPoly to_mu(const CoeffPoly& p) { return p.param() == Param::B ? p.substitute_param(b_to_mu()) : p; }

CoeffPoly in_param(const CoeffPoly& p, Param param) {
    if (param == p.param()) return p;
    return param == Param::B ? p.substitute_param(mu_to_b()) : p.substitute_param(b_to_mu());
}

CoeffPoly two_mu_plus_one(const ParamPoly& m) { return CoeffPoly(m.scaled(2) + ParamPoly(1)); }

// Right-hand side of 2 B_s = ... for a given A_s.
CoeffPoly twice_b(const CoeffPoly& f, const CoeffPoly& a, const ParamPoly& m) {
    const CoeffPoly da = a.derivative();
    const CoeffPoly integrand = f * a - two_mu_plus_one(m) * da.divide_by_z();
    return integrand.integrate_from_zero() - da;
}

// Right-hand side of 2 A_{s+1} = ... with the antiderivative taken from zero.
CoeffPoly twice_a_next(const CoeffPoly& f, const CoeffPoly& b, const ParamPoly& m) {
    return two_mu_plus_one(m) * b.divide_by_z() - b.derivative() + (f * b).integrate_from_zero();
}

}  // namespace

CoeffPoly confluent_f() { return CoeffPoly::monomial(ParamPoly(1), 2); }

CoefficientTable compute_coefficient_table(const CoeffPoly& f_in, int order, Param param) {
    if (order < 0) throw PreconditionError("coefficient table order must be non-negative");
    const CoeffPoly f = to_mu(f_in);
    if (f.actual_parity() != Parity::Even) throw ParityError("f must be an even polynomial in z");
    const BigRational half(1, 2);

    CoefficientTable t;
    t.f = f.with_parity(Parity::Even);
    t.order = order;
    t.param = Param::Mu;
    t.A.push_back(CoeffPoly(ParamPoly(1)).with_parity(Parity::Even));
    try {
        for (int s = 0; s <= order; ++s) {
            t.B.push_back(twice_b(t.f, t.A.back(), mu()).scaled(half).with_parity(Parity::Odd));
            if (s == order) break;
            CoeffPoly next = twice_a_next(t.f, t.B.back(), mu()).scaled(half);
            next -= CoeffPoly(next.at_zero());
            t.A.push_back(next.with_parity(Parity::Even));
        }
    } catch (const DivisibilityError& e) {
        throw InternalError(std::string("coefficient recursion lost exact divisibility: ") + e.what());
    } catch (const ParityError& e) {
        throw InternalError(std::string("coefficient recursion lost parity: ") + e.what());
    }
    return param == Param::Mu ? t : convert_param(t, param);
}

CoefficientTable convert_param(const CoefficientTable& table, Param param) {
    CoefficientTable t = table;
    t.param = param;
    t.f = in_param(table.f, param);
    for (auto& a : t.A) a = in_param(a, param);
    for (auto& b : t.B) b = in_param(b, param);
    return t;
}

LoweredCoefficients lower_coefficients(const CoefficientTable& table) {
    const CoefficientTable t = table.param == Param::Mu ? table : convert_param(table, Param::Mu);
    const ParamPoly minus_mu = -mu();
    LoweredCoefficients out;
    out.a.push_back(CoeffPoly(ParamPoly(1)).with_parity(Parity::Even));
    for (int s = 0; s <= t.order; ++s) {
        const CoeffPoly bs = t.B[static_cast<std::size_t>(s)].substitute_param(minus_mu);
        out.b.push_back(bs);
        if (s < t.order) {
            const CoeffPoly an = t.A[static_cast<std::size_t>(s + 1)].substitute_param(minus_mu) +
                                 bs.divide_by_z().scaled(mu().scaled(2));
            out.a.push_back(an.with_parity(Parity::Even));
        }
    }
    if (table.param != Param::Mu) {
        for (auto& a : out.a) a = in_param(a, table.param);
        for (auto& b : out.b) b = in_param(b, table.param);
    }
    return out;
}

TruncSeries normalizer_series(const CoefficientTable& table, int sign, int series_order) {
    if (sign != 1 && sign != -1) throw PreconditionError("normalizer sign must be +1 or -1");
    if (series_order < 0 || series_order > table.order + 1) {
        throw PreconditionError("normalizer order " + std::to_string(series_order) +
                                " needs a coefficient table of order >= " + std::to_string(series_order - 1));
    }
    const CoefficientTable t = table.param == Param::Mu ? table : convert_param(table, Param::Mu);
    const ParamPoly m = sign == 1 ? mu() : -mu();
    std::vector<CoeffPoly> c(static_cast<std::size_t>(series_order) + 1);
    c[0] = CoeffPoly(ParamPoly(1));
    for (int s = 0; s + 1 <= series_order; ++s) {
        const ParamPoly slope = t.B[static_cast<std::size_t>(s)].coeff(1).substitute(m);
        c[static_cast<std::size_t>(s + 1)] = CoeffPoly(m.scaled(-2) * slope);
    }
    if (table.param != Param::Mu) {
        for (auto& x : c) x = in_param(x, table.param);
    }
    return TruncSeries(ratpoly::SeriesVar::InvU2, series_order, std::move(c));
}

ShiftedBasis shift_basis(const CoefficientTable& table, const std::vector<ParamPoly>& seeds) {
    if (seeds.empty() || !(seeds[0] == ParamPoly(1))) throw InvalidSeedError("seeds[0] must equal 1");
    ShiftedBasis out;
    for (int s = 0; s <= table.order; ++s) {
        CoeffPoly a;
        CoeffPoly b;
        for (int r = 0; r <= s; ++r) {
            const std::size_t k = static_cast<std::size_t>(s - r);
            if (k >= seeds.size() || seeds[k].is_zero()) continue;
            a += table.A[static_cast<std::size_t>(r)].scaled(seeds[k]);
            b += table.B[static_cast<std::size_t>(r)].scaled(seeds[k]);
        }
        out.A.push_back(a);
        out.B.push_back(b);
    }
    return out;
}

std::vector<std::string> check_recursion(const CoeffPoly& f_in, const std::vector<CoeffPoly>& A_in,
                                         const std::vector<CoeffPoly>& B_in, Param param) {
    std::vector<std::string> failures;
    const CoeffPoly f = to_mu(f_in);
    std::vector<CoeffPoly> A, B;
    for (const auto& a : A_in) A.push_back(param == Param::B ? to_mu(a) : a);
    for (const auto& b : B_in) B.push_back(param == Param::B ? to_mu(b) : b);

    if (A.empty() || !(A[0] == CoeffPoly(ParamPoly(1)))) failures.push_back("A_0 != 1");
    for (std::size_t s = 0; s < A.size(); ++s) {
        if (A[s].actual_parity() != Parity::Even) failures.push_back("A_" + std::to_string(s) + " is not even");
    }
    for (std::size_t s = 0; s < B.size(); ++s) {
        if (B[s].actual_parity() != Parity::Odd) failures.push_back("B_" + std::to_string(s) + " is not odd");
    }
    if (!failures.empty()) return failures;

    for (std::size_t s = 0; s < B.size() && s < A.size(); ++s) {
        if (!(B[s].scaled(BigRational(2)) == twice_b(f, A[s], mu()))) {
            failures.push_back("B equation fails at s=" + std::to_string(s));
        }
    }
    for (std::size_t s = 0; s + 1 < A.size() && s < B.size(); ++s) {
        const CoeffPoly diff = A[s + 1].scaled(BigRational(2)) - twice_a_next(f, B[s], mu());
        if (diff.degree() > 0) failures.push_back("A equation fails at s=" + std::to_string(s + 1));
    }
    return failures;
}

}  // namespace kasym::olver
