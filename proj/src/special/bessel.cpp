#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

#include "detail.hpp"
#include "kasym/errors.hpp"

namespace kasym::special {
namespace {

using detail::CompensatedSum;
using detail::fmt;
using detail::pi;
using detail::to_d;
using numeric::cabs;
using numeric::DD;
using numeric::ScalarTraits;

// z = r e^{i(theta0 + m pi)} with theta0 in (-pi/2, pi/2].
template <class T>
struct HalfTurns {
    T r;
    T theta0;
    long m;
};

template <class T>
HalfTurns<T> reduce_half_turns(const RiemannPoint<T>& z) {
    const double q = to_d((z.theta() - pi<T>() / T(2)) / pi<T>());
    const long m = static_cast<long>(std::ceil(q - 1e-12));
    return {z.r(), z.theta() - pi<T>() * T(static_cast<double>(m)), m};
}

template <class T>
Complex<T> polar_t(const T& r, const T& theta) {
    using std::cos;
    using std::sin;
    return {r * cos(theta), r * sin(theta)};
}

template <class T>
double eps() {
    return ScalarTraits<T>::epsilon;
}

template <class T>
struct Estimate {
    LogComplex<T> value;
    double rel_err;
};

// I_nu(w) = (w/2)^nu / Gamma(nu+1) * sum_k (w^2/4)^k / (k! (nu+1)_k)
template <class T>
Estimate<T> i_series(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol) {
    const Complex<T> w = polar_t(r, theta);
    const Complex<T> q = w * w / T(4);
    const double qa = to_d(cabs(q));
    Complex<T> term(1);
    CompensatedSum<T> acc;
    acc.add(term);
    double maxabs = 1.0;
    for (int k = 1;; ++k) {
        if (k > 200000) throw PrecisionExhaustedError("Bessel I series did not terminate");
        const Complex<T> den = (nu + T(k)) * T(k);
        term *= q / den;
        acc.add(term);
        const double at = to_d(cabs(term));
        maxabs = std::max(maxabs, at);
        const double ratio = qa / to_d(cabs(den));
        if (at == 0.0) break;
        if (ratio < 0.5 && at <= tol.series * to_d(cabs(acc.value()))) break;
    }
    const Complex<T> s = acc.value();
    using std::log;
    const Complex<T> lw(log(r / T(2)), theta);
    const LogComplex<T> pref = LogComplex<T>::exp(nu * lw - log_gamma(nu + T(1)));
    const double sa = to_d(cabs(s));
    const double err = sa == 0.0 ? std::numeric_limits<double>::infinity() : 8.0 * eps<T>() * maxabs / sa;
    return {pref * LogComplex<T>::from_complex(s), err};
}

// sum_k (+-1)^k a_k(nu) / w^k, truncated before the terms start growing.
template <class T>
Complex<T> hankel_sum(const Complex<T>& nu, const Complex<T>& w, bool alternate, const Tolerance& tol,
                      double& rel_err) {
    const Complex<T> mu4 = nu * nu * T(4);
    Complex<T> term(1);
    CompensatedSum<T> acc;
    acc.add(term);
    double last = 1.0;
    rel_err = 0.0;
    for (int k = 1; k < 2000; ++k) {
        const T odd(2 * k - 1);
        Complex<T> f = (mu4 - odd * odd) / (w * T(8 * k));
        if (alternate) f = -f;
        const Complex<T> next = term * f;
        const double an = to_d(cabs(next));
        const double sa = to_d(cabs(acc.value()));
        if (an == 0.0) return acc.value();
        if (an >= last) {
            rel_err = last / sa;
            return acc.value();
        }
        term = next;
        acc.add(term);
        last = an;
        if (an <= tol.series * sa) {
            rel_err = an / sa;
            return acc.value();
        }
    }
    rel_err = last / to_d(cabs(acc.value()));
    return acc.value();
}

// Large-argument form, valid for |arg w| <= pi/2.
template <class T>
LogComplex<T> i_asymptotic(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol) {
    const Complex<T> w = polar_t(r, theta);
    double e1 = 0, e2 = 0;
    const Complex<T> sm = hankel_sum(nu, w, true, tol, e1);
    const Complex<T> sp = hankel_sum(nu, w, false, tol, e2);
    if (std::max(e1, e2) > tol.budget) {
        throw PrecisionExhaustedError("Bessel I asymptotic series truncation error " + std::to_string(std::max(e1, e2)));
    }
    using std::log;
    const Complex<T> half_log(log(pi<T>() * T(2) * r) / T(2), theta / T(2));
    const T sgn = theta >= T(0) ? T(1) : T(-1);
    const Complex<T> rot = Complex<T>(T(0), sgn * pi<T>()) * (nu + T(0.5));
    const LogComplex<T> t1 = LogComplex<T>::exp(w - half_log) * sm;
    const LogComplex<T> t2 = LogComplex<T>::exp(rot - w - half_log) * sp;
    return t1 + t2;
}

template <class T>
LogComplex<T> i_base(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol) {
    const double R = bessel_switch_radius<T>();
    const double rd = to_d(r);
    using std::cos;
    const double cancel = rd * (1.0 - std::cos(to_d(theta)));
    const bool large = rd >= R;
    if (large && (cancel > 2.0 * R || rd > 8.0 * R)) return i_asymptotic(nu, r, theta, tol);
    const Estimate<T> s = i_series(nu, r, theta, tol);
    if (s.rel_err <= tol.budget) return s.value;
    if (large) return i_asymptotic(nu, r, theta, tol);
    throw PrecisionExhaustedError("Bessel I series lost precision (estimated relative error " +
                                  std::to_string(s.rel_err) + ")");
}

// K_n for integer n >= 0 from the logarithmic series for K_0, K_1 and
// upward recurrence.
template <class T>
Estimate<T> k_integer(long n, const T& r, const T& theta, const Tolerance& tol) {
    const Complex<T> w = polar_t(r, theta);
    const Complex<T> q = w * w / T(4);
    using std::log;
    const Complex<T> L(log(r / T(2)), theta);
    const T gamma = ScalarTraits<T>::euler_gamma();

    CompensatedSum<T> i0, s0, i1, s1;
    Complex<T> f(1);  // q^k/(k!)^2
    Complex<T> g(1);  // q^k/(k!(k+1)!)
    T psi = -gamma;   // psi(k+1)
    double abs_i0 = 0, abs_s0 = 0, abs_i1 = 0, abs_s1 = 0;
    const double stop = tol.series * std::exp(-to_d(r)) / (1.0 + to_d(r)) * 0.1;
    for (int k = 0;; ++k) {
        if (k > 0) {
            f *= q / T(static_cast<double>(k) * k);
            g *= q / T(static_cast<double>(k) * (k + 1));
            psi += T(1) / T(k);
        }
        const T psi1 = psi + T(1) / T(k + 1);
        i0.add(f);
        s0.add(f * psi);
        i1.add(g);
        s1.add(g * (psi + psi1));
        const double fa = to_d(cabs(f)), ga = to_d(cabs(g));
        abs_i0 += fa;
        abs_s0 += fa * std::abs(to_d(psi));
        abs_i1 += ga;
        abs_s1 += ga * std::abs(to_d(psi + psi1));
        const double contrib = (fa + ga) * (2.0 + std::abs(to_d(psi1)) + to_d(cabs(L)));
        if (k > 2 && to_d(cabs(q)) < 0.5 * (k + 1) * (k + 1) && contrib < stop) break;
        if (k > 100000) throw PrecisionExhaustedError("K series did not terminate");
    }
    const Complex<T> half_w = w / T(2);
    const Complex<T> K0 = -L * i0.value() + s0.value();
    const Complex<T> K1 = T(1) / w + L * half_w * i1.value() - half_w * s1.value() / T(2);
    const double la = to_d(cabs(L));
    const double hw = to_d(cabs(half_w));
    const double err0 = 8.0 * eps<T>() * (la * abs_i0 + abs_s0) / to_d(cabs(K0));
    const double err1 = 8.0 * eps<T>() * (1.0 / to_d(r) + hw * (la * abs_i1 + abs_s1)) / to_d(cabs(K1));
    if (n == 0) return {LogComplex<T>::from_complex(K0), err0};
    Complex<T> km = K0, k = K1;
    for (long j = 1; j < n; ++j) {
        const Complex<T> next = km + k * (T(2.0 * static_cast<double>(j)) / w);
        km = k;
        k = next;
    }
    return {LogComplex<T>::from_complex(k), std::max(err0, err1)};
}

template <class T>
LogComplex<T> k_asymptotic(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol) {
    const Complex<T> w = polar_t(r, theta);
    double err = 0;
    const Complex<T> s = hankel_sum(nu, w, false, tol, err);
    if (err > tol.budget) {
        throw PrecisionExhaustedError("Bessel K asymptotic series truncation error " + std::to_string(err));
    }
    using std::log;
    const Complex<T> half_log((log(pi<T>() / T(2)) - log(r)) / T(2), -theta / T(2));
    return LogComplex<T>::exp(half_log - w) * s;
}

template <class T>
LogComplex<T> k_base(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol);

template <class T>
bool near_integer(const Complex<T>& nu) {
    const double re = to_d(nu.real());
    return std::abs(to_d(nu.imag())) < 1e-3 && std::abs(re - std::nearbyint(re)) < 1e-3;
}

template <class T>
LogComplex<T> k_base(const Complex<T>& nu, const T& r, const T& theta, const Tolerance& tol) {
    if (to_d(r) >= bessel_switch_radius<T>()) return k_asymptotic(nu, r, theta, tol);
    long n = 0;
    if (detail::is_integer(nu, &n)) {
        const Estimate<T> e = k_integer(std::labs(n), r, theta, tol);
        if (e.rel_err > tol.budget) {
            throw PrecisionExhaustedError("K_n series lost precision (estimated relative error " +
                                          std::to_string(e.rel_err) + ")");
        }
        return e.value;
    }
    if constexpr (std::is_same_v<T, double>) {
        // the reflection formula cancels like 1/sin(pi nu); redo it in double-double
        if (near_integer(nu)) {
            return k_base<DD>(numeric::to_complex_t<DD>(nu), DD(r), DD(theta), tol).template cast<double>();
        }
    }
    // K_nu = pi/(2 sin(pi nu)) (I_{-nu} - I_nu)
    const Estimate<T> im = i_series(Complex<T>(-nu), r, theta, tol);
    const Estimate<T> ip = i_series(nu, r, theta, tol);
    const LogComplex<T> diff = im.value - ip.value;
    if (diff.is_zero()) throw PrecisionExhaustedError("K reflection formula cancelled completely");
    const double gm = to_d(im.value.logmag() - diff.logmag());
    const double gp = to_d(ip.value.logmag() - diff.logmag());
    const double err = (im.rel_err + eps<T>()) * std::exp(gm) + (ip.rel_err + eps<T>()) * std::exp(gp);
    if (err > tol.budget) {
        throw PrecisionExhaustedError("K reflection formula lost precision (estimated relative error " +
                                      std::to_string(err) + ")");
    }
    return LogComplex<T>::from_real(pi<T>() / T(2)) / LogComplex<T>::from_complex(numeric::csin_pi(nu)) * diff;
}

template <class T>
Complex<T> effective_order(const Complex<T>& nu) {
    long n = 0;
    if (detail::is_integer(nu, &n) && n < 0) return Complex<T>(-nu);
    return nu;
}

}  // namespace

template <class T>
LogComplex<T> bessel_i(const Complex<T>& nu_in, const RiemannPoint<T>& z, const Tolerance& tol) {
    const Complex<T> nu = effective_order(nu_in);
    const HalfTurns<T> h = reduce_half_turns(z);
    const LogComplex<T> base = i_base(nu, h.r, h.theta0, tol);
    if (h.m == 0) return base;
    // I_nu(w e^{i m pi}) = e^{i m pi nu} I_nu(w)
    const T mp = pi<T>() * T(static_cast<double>(h.m));
    return base * LogComplex<T>::exp(Complex<T>(-mp * nu.imag(), mp * nu.real()));
}

template <class T>
LogComplex<T> bessel_k(const Complex<T>& nu_in, const RiemannPoint<T>& z, const Tolerance& tol) {
    const Complex<T> nu = effective_order(nu_in);
    const HalfTurns<T> h = reduce_half_turns(z);
    const LogComplex<T> base = k_base(nu, h.r, h.theta0, tol);
    if (h.m == 0) return base;
    // K_nu(w e^{i m pi}) = e^{-i m pi nu} K_nu(w) - pi i sin(m pi nu)/sin(pi nu) I_nu(w)
    const T mp = pi<T>() * T(static_cast<double>(h.m));
    const LogComplex<T> t1 = base * LogComplex<T>::exp(Complex<T>(mp * nu.imag(), -mp * nu.real()));
    Complex<T> ratio;
    long n = 0;
    if (detail::is_integer(nu, &n)) {
        const bool odd = ((n % 2) != 0) && (((h.m - 1) % 2) != 0);
        ratio = Complex<T>(T(static_cast<double>(odd ? -h.m : h.m)));
    } else {
        ratio = numeric::csin_pi(Complex<T>(nu * T(static_cast<double>(h.m)))) / numeric::csin_pi(nu);
    }
    if (ratio == Complex<T>()) return t1;
    using std::log;
    const LogComplex<T> t2 = LogComplex<T>::from_log(log(pi<T>()), -pi<T>() / T(2)) *
                             LogComplex<T>::from_complex(ratio) * i_base(nu, h.r, h.theta0, tol);
    return t1 + t2;
}

template LogComplex<double> bessel_i(const Complex<double>&, const RiemannPoint<double>&, const Tolerance&);
template LogComplex<DD> bessel_i(const Complex<DD>&, const RiemannPoint<DD>&, const Tolerance&);
template LogComplex<double> bessel_k(const Complex<double>&, const RiemannPoint<double>&, const Tolerance&);
template LogComplex<DD> bessel_k(const Complex<DD>&, const RiemannPoint<DD>&, const Tolerance&);

}  // namespace kasym::special
