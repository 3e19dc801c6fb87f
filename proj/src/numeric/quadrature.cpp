#include "kasym/numeric/quadrature.hpp"

#include <gmpxx.h>

#include <cmath>
#include <utility>

namespace kasym::numeric {
namespace {

DoubleDouble dd_from_mpq(const mpq_class& q) {
    const double hi = q.get_d();
    const mpq_class rem = q - mpq_class(hi);
    return DoubleDouble::from_parts(hi, rem.get_d());
}

// P_n(x) and P_n'(x) by the three-term recurrence.
template <class T>
std::pair<T, T> legendre(int n, const T& x) {
    T p0 = T(1);
    T p1 = x;
    if (n == 0) return {p0, T(0)};
    for (int k = 2; k <= n; ++k) {
        const T p2 = (T(2 * k - 1) * x * p1 - T(k - 1) * p0) / T(k);
        p0 = p1;
        p1 = p2;
    }
    // (1 - x^2) P_n' = n (P_{n-1} - x P_n)
    const T dp = T(n) * (p0 - x * p1) / (T(1) - x * x);
    return {p1, dp};
}

// Rational coefficients of P_n, index = power of x.
std::vector<mpq_class> legendre_coefficients(int n) {
    std::vector<mpq_class> p0{1};
    std::vector<mpq_class> p1{0, 1};
    if (n == 0) return p0;
    for (int k = 2; k <= n; ++k) {
        std::vector<mpq_class> p2(static_cast<std::size_t>(k) + 1, 0);
        for (std::size_t i = 0; i < p1.size(); ++i) p2[i + 1] += mpq_class(2 * k - 1, k) * p1[i];
        for (std::size_t i = 0; i < p0.size(); ++i) p2[i] -= mpq_class(k - 1, k) * p0[i];
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

mpq_class monomial_moment(int j) { return j % 2 == 1 ? mpq_class(0) : mpq_class(2, j + 1); }

// Stieltjes polynomial E_8 (monic, even) for the 7-point Gauss rule:
// orthogonal to x^k P_7 for k = 0..7.
std::vector<mpq_class> stieltjes_e8() {
    const auto p7 = legendre_coefficients(7);
    auto p7_moment = [&](int k) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < p7.size(); ++i) s += p7[i] * monomial_moment(static_cast<int>(i) + k);
        return s;
    };
    // unknowns c0, c2, c4, c6; rows for k = 1, 3, 5, 7
    std::array<std::array<mpq_class, 5>, 4> m;
    for (int r = 0; r < 4; ++r) {
        const int k = 2 * r + 1;
        for (int c = 0; c < 4; ++c) m[r][c] = p7_moment(k + 2 * c);
        m[r][4] = -p7_moment(k + 8);
    }
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[c], m[piv]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (int j = c; j < 5; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<mpq_class> e(9, 0);
    for (int c = 0; c < 4; ++c) e[static_cast<std::size_t>(2 * c)] = m[c][4] / m[c][c];
    e[8] = 1;
    return e;
}

template <class T>
std::pair<T, T> eval_poly(const std::vector<T>& c, const T& x) {
    T p = c.back();
    T dp = T(0);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
    }
    return {p, dp};
}

GaussKronrod15<DoubleDouble> build_dd_rule() {
    using DD = DoubleDouble;
    GaussKronrod15<DD> rule{};

    // Gauss nodes: positive roots of P_7
    std::array<DD, 3> g;
    for (int i = 1; i <= 3; ++i) {
        double x = std::cos(ScalarTraits<double>::pi() * (i - 0.25) / 7.5);
        for (int it = 0; it < 50; ++it) {
            const auto [p, dp] = legendre<double>(7, x);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-17) break;
        }
        DD xd = x;
        for (int it = 0; it < 3; ++it) {
            const auto [p, dp] = legendre<DD>(7, xd);
            xd -= p / dp;
        }
        g[static_cast<std::size_t>(i - 1)] = xd;
    }

    // Kronrod nodes: positive roots of E_8, interlacing the Gauss nodes
    const auto e8q = stieltjes_e8();
    std::vector<double> e8d;
    std::vector<DD> e8;
    for (const auto& c : e8q) {
        e8d.push_back(c.get_d());
        e8.push_back(dd_from_mpq(c));
    }
    const std::array<double, 5> brackets{1.0, static_cast<double>(g[0]), static_cast<double>(g[1]),
                                         static_cast<double>(g[2]), 0.0};
    std::array<DD, 4> k;
    for (int i = 0; i < 4; ++i) {
        double lo = brackets[static_cast<std::size_t>(i + 1)];
        double hi = brackets[static_cast<std::size_t>(i)];
        double flo = eval_poly(e8d, lo).first;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = eval_poly(e8d, mid).first;
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        DD xd = 0.5 * (lo + hi);
        for (int it = 0; it < 4; ++it) {
            const auto [p, dp] = eval_poly(e8, xd);
            xd -= p / dp;
        }
        k[static_cast<std::size_t>(i)] = xd;
    }

    rule.x = {k[0], g[0], k[1], g[1], k[2], g[2], k[3], DD(0)};

    // Kronrod weights from exactness on P_0, P_2, ..., P_14 (odd degrees
    // vanish by symmetry).
    std::array<std::array<DD, 9>, 8> m;
    for (int r = 0; r < 8; ++r) {
        const int deg = 2 * r;
        for (int c = 0; c < 8; ++c) {
            const DD p = legendre<DD>(deg, rule.x[static_cast<std::size_t>(c)]).first;
            m[r][c] = c == 7 ? p : p * 2.0;
        }
        m[r][8] = r == 0 ? DD(2) : DD(0);
    }
    for (int c = 0; c < 8; ++c) {
        int piv = c;
        for (int r = c + 1; r < 8; ++r) {
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        }
        std::swap(m[c], m[piv]);
        for (int r = 0; r < 8; ++r) {
            if (r == c) continue;
            const DD f = m[r][c] / m[c][c];
            for (int j = c; j < 9; ++j) m[r][j] -= f * m[c][j];
        }
    }
    for (int c = 0; c < 8; ++c) rule.wk[static_cast<std::size_t>(c)] = m[c][8] / m[c][c];

    for (int i = 0; i < 4; ++i) {
        const DD x = rule.x[static_cast<std::size_t>(2 * i + 1)];
        const DD dp = legendre<DD>(7, x).second;
        rule.wg[static_cast<std::size_t>(i)] = DD(2) / ((DD(1) - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

template <>
const GaussKronrod15<DoubleDouble>& gauss_kronrod15<DoubleDouble>() {
    static const GaussKronrod15<DoubleDouble> rule = build_dd_rule();
    return rule;
}

template <>
const GaussKronrod15<double>& gauss_kronrod15<double>() {
    static const GaussKronrod15<double> rule = [] {
        const auto& dd = gauss_kronrod15<DoubleDouble>();
        GaussKronrod15<double> r{};
        for (std::size_t i = 0; i < 8; ++i) {
            r.x[i] = static_cast<double>(dd.x[i]);
            r.wk[i] = static_cast<double>(dd.wk[i]);
        }
        for (std::size_t i = 0; i < 4; ++i) r.wg[i] = static_cast<double>(dd.wg[i]);
        return r;
    }();
    return rule;
}

}  // namespace kasym::numeric
