#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <gmpxx.h>

#include "detail.hpp"
#include "kasym/errors.hpp"
#include "kasym/numeric/quadrature.hpp"

namespace kasym::special {
namespace {

using detail::CompensatedSum;
using detail::pi;
using detail::to_d;
using numeric::cabs;
using numeric::DD;
using numeric::ScalarTraits;

template <class T>
Complex<T> polar_t(const T& r, const T& theta) {
    using std::cos;
    using std::sin;
    return {r * cos(theta), r * sin(theta)};
}

// Margins of the integration ray: away from the branch point t = -1 and
// inside the sector where e^{-xt} decays.
constexpr double kBranchMargin = 0.3;
constexpr double kDecayMargin = 0.15;

// Integration contour for Gamma(a) U: 0 -> corner along a straight line,
// then corner + s e^{i psi} for s >= 0.
struct Contour {
    std::complex<double> corner;
    double psi = 0.0;
    bool saddle = false;
};

struct Integrand {
    std::complex<double> a, x, c;  // c = b - a - 1
    std::complex<double> h(std::complex<double> t) const {
        return -x * t + (a - 1.0) * std::log(t) + c * std::log(1.0 + t);
    }
    std::complex<double> dh(std::complex<double> t) const { return -x + (a - 1.0) / t + c / (1.0 + t); }
    std::complex<double> d2h(std::complex<double> t) const {
        return -(a - 1.0) / (t * t) - c / ((1.0 + t) * (1.0 + t));
    }
};

// Whether corner + s e^{i psi}, s > 0, meets the real half-line (-inf, q].
bool crosses_cut(std::complex<double> corner, double psi, double q) {
    const double sn = std::sin(psi);
    if (corner.imag() == 0.0) return corner.real() <= q || (sn == 0.0 && std::cos(psi) < 0.0);
    if (sn == 0.0 || corner.imag() * sn > 0.0) return false;
    const double s = -corner.imag() / sn;
    return corner.real() + s * std::cos(psi) <= q;
}

// Largest interior maximum of Re h along the ray at angle phi, or -1.
double ray_split(const Integrand& f, double phi) {
    const std::complex<double> e = std::polar(1.0, phi);
    auto slope = [&](double rho) { return std::real(f.dh(rho * e) * e); };
    double split = -1.0;
    double best = -std::numeric_limits<double>::infinity();
    for (double rho = 1e-8; rho < 1e8; rho *= 2) {
        if (slope(rho) > 0 && slope(2 * rho) <= 0) {
            double lo = rho, hi = 2 * rho;
            for (int i = 0; i < 60; ++i) {
                const double mid = std::sqrt(lo * hi);
                (slope(mid) > 0 ? lo : hi) = mid;
            }
            const double v = std::real(f.h(lo * e));
            if (v > best) {
                best = v;
                split = lo;
            }
        }
    }
    return split;
}

// Ray towards the saddle of the integrand when that direction is admissible;
// otherwise a straight run to the saddle followed by the steepest-descent
// direction, clamped into the sector where e^{-xt} decays.
Contour choose_contour(const Integrand& f, double r, double theta) {
    const double half_pi = std::acos(0.0);
    const double lo = std::max(-2 * half_pi + kBranchMargin, -half_pi + kDecayMargin - theta);
    const double hi = std::min(2 * half_pi - kBranchMargin, half_pi - kDecayMargin - theta);
    double phi = -theta / 2;
    std::complex<double> ts;
    const std::complex<double> am1 = f.a - 1.0;
    if (std::abs(am1) > 1e-6) {
        const std::complex<double> guess = std::sqrt(am1) * std::polar(1.0 / std::sqrt(r), -theta / 2);
        // x t^2 + (x - b + 2) t - (a - 1) = 0
        const std::complex<double> B = f.x + f.c + f.a + 1.0;  // x - b + 2 with b = c + a + 1
        const std::complex<double> disc = std::sqrt(B * B + 4.0 * f.x * am1);
        const std::complex<double> t1 = (-B + disc) / (2.0 * f.x);
        const std::complex<double> t2 = (-B - disc) / (2.0 * f.x);
        ts = std::abs(t1 - guess) <= std::abs(t2 - guess) ? t1 : t2;
        if (std::abs(ts) > 0) phi = std::arg(ts);
    }
    const double clamped = std::clamp(phi, lo, hi);
    if (clamped != phi && std::abs(ts) > 1e-3 && std::abs(phi) < 2 * half_pi - kBranchMargin) {
        const double psi0 = (2 * half_pi - std::arg(f.d2h(ts))) / 2;
        const double mid = (lo + hi) / 2;
        double psi = psi0;
        for (double cand : {psi0 - 4 * half_pi, psi0 - 2 * half_pi, psi0 + 2 * half_pi}) {
            if (std::abs(cand - mid) < std::abs(psi - mid)) psi = cand;
        }
        psi = std::clamp(psi, lo, hi);
        if (!crosses_cut(ts, psi, 0.0) && !crosses_cut(ts, psi, -1.0)) return {ts, psi, true};
    }
    double split = ray_split(f, clamped);
    if (split < 0) split = std::max(1e-3, 1.0 / (r + 1.0));
    return {std::polar(split, clamped), clamped, false};
}

// Complex multiprecision arithmetic for the M series when double-double
// cannot absorb the cancellation.
struct BigComplex {
    mpf_class re, im;
};

template <class T>
mpf_class to_mpf(const T& v, mp_bitcnt_t bits) {
    if constexpr (std::is_same_v<T, DD>) {
        return mpf_class(v.hi(), bits) + mpf_class(v.lo(), bits);
    } else {
        return mpf_class(v, bits);
    }
}

template <class T>
T from_mpf(const mpf_class& v) {
    const double hi = v.get_d();
    if constexpr (std::is_same_v<T, DD>) {
        const mpf_class rest = v - mpf_class(hi, v.get_prec());
        return DD(hi) + DD(rest.get_d());
    } else {
        return hi;
    }
}

BigComplex mul(const BigComplex& p, const BigComplex& q) {
    return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

BigComplex div(const BigComplex& p, const BigComplex& q) {
    const mpf_class d = q.re * q.re + q.im * q.im;
    return {(p.re * q.re + p.im * q.im) / d, (p.im * q.re - p.re * q.im) / d};
}

double big_abs(const BigComplex& z) {
    long e1 = 0, e2 = 0;
    const double m1 = mpf_get_d_2exp(&e1, z.re.get_mpf_t());
    const double m2 = mpf_get_d_2exp(&e2, z.im.get_mpf_t());
    // log2 |z| up to a bounded factor
    const double l1 = m1 == 0 ? -1e300 : std::log2(std::abs(m1)) + static_cast<double>(e1);
    const double l2 = m2 == 0 ? -1e300 : std::log2(std::abs(m2)) + static_cast<double>(e2);
    return std::max(l1, l2);
}

// Returns the sum and log2 of the largest term.
template <class T>
std::pair<BigComplex, double> m_series_mp(const Complex<T>& a, const Complex<T>& b, const Complex<T>& x,
                                          mp_bitcnt_t bits, double rel_tol) {
    const BigComplex A{to_mpf(a.real(), bits), to_mpf(a.imag(), bits)};
    const BigComplex B{to_mpf(b.real(), bits), to_mpf(b.imag(), bits)};
    const BigComplex X{to_mpf(x.real(), bits), to_mpf(x.imag(), bits)};
    BigComplex term{mpf_class(1, bits), mpf_class(0, bits)};
    BigComplex sum = term;
    double max_log2 = 0.0;
    const double log2_tol = std::log2(rel_tol);
    const double xa = to_d(cabs(x));
    for (long n = 1;; ++n) {
        if (n > 2000000) throw PrecisionExhaustedError("M series did not terminate");
        const mpf_class nm1(n - 1, bits);
        const BigComplex num{A.re + nm1, A.im};
        const BigComplex den{(B.re + nm1) * n, B.im * n};
        term = div(mul(mul(term, num), X), den);
        sum.re += term.re;
        sum.im += term.im;
        const double lt = big_abs(term);
        max_log2 = std::max(max_log2, lt);
        const double nn = static_cast<double>(n);
        const double ratio = to_d(cabs(a + T(nn))) * xa / (to_d(cabs(b + T(nn))) * (nn + 1.0));
        if (ratio < 0.5 && lt <= log2_tol + big_abs(sum)) break;
        if (lt < -1e299) break;
    }
    return {sum, max_log2};
}

template <class T>
LogComplex<T> kummer_m_mp(const Complex<T>& a, const Complex<T>& b, const Complex<T>& x, const Tolerance& tol,
                          double err) {
    // bits lost to cancellation, then enough left for the working precision
    double lost = std::log2(std::max(1.0, err / ScalarTraits<T>::epsilon));
    for (int attempt = 0; attempt < 4; ++attempt) {
        const auto bits = static_cast<mp_bitcnt_t>(std::ceil(lost) + 160);
        if (bits > 8192) break;
        const auto [sum, max_log2] = m_series_mp(a, b, x, bits, tol.series);
        const double sum_log2 = big_abs(sum);
        const double need = max_log2 - sum_log2;
        if (need + 120 <= static_cast<double>(bits)) {
            const long e = static_cast<long>(std::floor(sum_log2));
            mpf_class re(0, bits), im(0, bits);
            if (e >= 0) {
                mpf_div_2exp(re.get_mpf_t(), sum.re.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
                mpf_div_2exp(im.get_mpf_t(), sum.im.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
            } else {
                mpf_mul_2exp(re.get_mpf_t(), sum.re.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
                mpf_mul_2exp(im.get_mpf_t(), sum.im.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
            }
            return LogComplex<T>::from_complex(Complex<T>(from_mpf<T>(re), from_mpf<T>(im))) *
                   LogComplex<T>::from_log(ScalarTraits<T>::ln2() * T(static_cast<double>(e)), T(0));
        }
        lost = 2 * need;
    }
    throw PrecisionExhaustedError("M series lost precision (estimated relative error " + std::to_string(err) + ")");
}

}  // namespace

template <class T>
LogComplex<T> kummer_m(const Complex<T>& a, const Complex<T>& b, const Complex<T>& x, const Tolerance& tol) {
    if (detail::is_integer(b) && b.real() <= T(0)) throw PoleError("M(a, b, x) needs b not a non-positive integer");
    constexpr int kRescale = 500;
    CompensatedSum<T> acc;
    Complex<T> term(1);
    acc.add(term);
    double maxabs = 1.0;
    long scale = 0;  // the sum is acc * 2^scale
    const double xa = to_d(cabs(x));
    for (long n = 1;; ++n) {
        if (n > 2000000) throw PrecisionExhaustedError("M series did not terminate");
        const T nn(static_cast<double>(n));
        term *= (a + nn - T(1)) * x / ((b + nn - T(1)) * nn);
        if (term == Complex<T>()) break;
        acc.add(term);
        const double at = to_d(cabs(term));
        maxabs = std::max(maxabs, at);
        if (at > 1e150) {
            term = detail::scale_pow2(term, -kRescale);
            acc.scale(-kRescale);
            maxabs = std::ldexp(maxabs, -kRescale);
            scale += kRescale;
        }
        const double ratio =
            to_d(cabs(a + nn)) * xa / (to_d(cabs(b + nn)) * (static_cast<double>(n) + 1.0));
        if (ratio < 0.5 && at <= tol.series * to_d(cabs(acc.value()))) break;
    }
    const Complex<T> s = acc.value();
    const double sa = to_d(cabs(s));
    const double err = 8.0 * ScalarTraits<T>::epsilon * maxabs / sa;
    if (!(err <= tol.budget)) return kummer_m_mp(a, b, x, tol, err);
    return LogComplex<T>::from_complex(s) *
           LogComplex<T>::from_log(ScalarTraits<T>::ln2() * T(static_cast<double>(scale)), T(0));
}

template <class T>
LogComplex<T> gamma_times_u_base(const Complex<T>& a, const Complex<T>& b, const RiemannPoint<T>& x,
                                 const Tolerance& tol) {
    if (!(a.real() > T(0))) throw PreconditionError("U integral representation needs Re a > 0");
    const double theta = to_d(x.theta());
    const double r = to_d(x.r());
    if (std::abs(theta) > 2 * std::acos(0.0) + 1e-9) {
        throw PreconditionError("base sheet needs arg x in (-pi, pi]");
    }
    const std::complex<double> ad = numeric::to_complex_double(a);
    const std::complex<double> bd = numeric::to_complex_double(b);
    const Integrand fd{ad, std::polar(r, theta), bd - ad - 1.0};
    const Contour path = choose_contour(fd, r, theta);

    // Gamma(a) U = int exp(h(t)) dt, h = -x t + (a-1) log t + (b-a-1) log(1+t)
    const Complex<T> xt = x.to_complex();
    const Complex<T> am1 = a - T(1);
    const Complex<T> c = b - a - T(1);
    auto h = [&](const Complex<T>& t, const Complex<T>& log_t) {
        return -xt * t + am1 * log_t + c * numeric::clog(Complex<T>(T(1)) + t);
    };
    const Complex<T> corner = numeric::to_complex_t<T>(path.corner);
    const Complex<T> log_corner = numeric::clog(corner);

    // scale: the largest Re h seen along the straight part
    double href_d = std::real(fd.h(path.corner));
    if (path.saddle) {
        for (int k = 1; k < 64; ++k) href_d = std::max(href_d, std::real(fd.h(path.corner * (k / 64.0))));
    }
    const T href = path.saddle ? T(href_d) : h(corner, log_corner).real();
    const T qtol(tol.quad);

    // 0 -> corner as t = corner v^p, smoothing t^{a-1} when Re a < 1
    const double re_a = ad.real();
    const int p = re_a >= 1.0 ? 1 : std::min(50, static_cast<int>(std::ceil(1.0 / re_a)));
    using std::log;
    const Complex<T> log_jac = log_corner + T(std::log(static_cast<double>(p)));
    auto f1 = [&](const T& v) -> Complex<T> {
        const T lv = log(v);
        const Complex<T> log_t = log_corner + lv * T(p);
        const Complex<T> t = p == 1 ? corner * v : numeric::cexp(log_t);
        return numeric::cexp(h(t, log_t) - href + log_jac + lv * T(p - 1));
    };
    auto first = numeric::integrate_adaptive(f1, T(0), T(1), qtol, qtol * T(1e-3));
    Complex<T> total = first.value;
    T err = first.error;

    // corner + s e^{i psi}, s >= 0, in panels of growing width
    const Complex<T> e = polar_t(T(1), T(path.psi));
    const std::complex<double> ed = std::polar(1.0, path.psi);
    const Complex<T> log_e(T(0), T(path.psi));
    auto f2 = [&](const T& s) -> Complex<T> {
        const Complex<T> t = corner + e * s;
        return numeric::cexp(h(t, numeric::clog(t)) - href + log_e);
    };
    auto slope = [&](double s) { return std::real(fd.dh(path.corner + s * ed) * ed); };
    const double decay = std::real(fd.x * ed);
    const double cabs_corner = std::abs(path.corner);
    double start = 0.0;
    double width = std::max(cabs_corner, 1.0 / decay) * 0.5;
    int panels = 0;
    while (true) {
        if (++panels > 400) throw QuadratureError("U integral tail did not decay");
        const T abs_tol = qtol * cabs(total) * T(0.1);
        auto seg = numeric::integrate_adaptive(f2, T(start), T(start + width), qtol, abs_tol);
        total += seg.value;
        err += seg.error;
        start += width;
        width *= 2;
        const std::complex<double> t_end = path.corner + start * ed;
        const double rate = decay - std::max(0.0, bd.real() - 2.0) / std::abs(t_end);
        if (rate > decay / 2 && slope(start) < 0) {
            const double tail = std::exp(std::real(fd.h(t_end)) - to_d(href)) * 2.0 / decay;
            if (tail < tol.quad * to_d(cabs(total)) * 0.1) break;
        }
    }
    const double rel = to_d(err) / to_d(cabs(total));
    if (!(rel <= tol.budget)) {
        throw QuadratureError("U integral error estimate " + std::to_string(rel) + " exceeds the budget");
    }
    return LogComplex<T>::from_log(href, T(0)) * LogComplex<T>::from_complex(total);
}

template <class T>
LogComplex<T> kummer_u(const Complex<T>& a, const Complex<T>& b, const RiemannPoint<T>& x, const Tolerance& tol) {
    if (!(a.real() > T(0))) throw PreconditionError("U needs Re a > 0");
    const T two_pi = pi<T>() * T(2);
    const double q = to_d((x.theta() - pi<T>()) / two_pi);
    const long m = static_cast<long>(std::ceil(q - 1e-12));
    const RiemannPoint<T> base(x.r(), x.theta() - two_pi * T(static_cast<double>(m)));
    LogComplex<T> u = gamma_times_u_base(a, b, base, tol) * reciprocal_gamma(a);
    if (m == 0) return u;

    // U(x e^{2 pi i}) = e^{-2 pi i b} U(x) + C M(a, b, x)
    // C = 2 pi i e^{-i pi b} / (Gamma(b) Gamma(1+a-b))
    using std::log;
    const LogComplex<T> c = LogComplex<T>::from_log(log(two_pi), pi<T>() / T(2)) *
                            LogComplex<T>::exp(Complex<T>(pi<T>() * b.imag(), -pi<T>() * b.real())) *
                            reciprocal_gamma(b) * reciprocal_gamma(Complex<T>(a - b + T(1)));
    // m turns at once: sum_{k<m} e^{-2 pi i b k} = e^{-i pi b (m-1)} sin(pi b m)/sin(pi b)
    const T md(static_cast<double>(m));
    LogComplex<T> ratio;
    if (detail::is_integer(b)) {
        ratio = LogComplex<T>::from_real(md);
    } else {
        ratio = LogComplex<T>::from_complex(numeric::csin_pi(Complex<T>(b * md))) /
                LogComplex<T>::from_complex(numeric::csin_pi(b)) *
                LogComplex<T>::exp(Complex<T>(pi<T>() * b.imag(), -pi<T>() * b.real()) * (md - T(1)));
    }
    const LogComplex<T> turns = LogComplex<T>::exp(Complex<T>(two_pi * b.imag(), -two_pi * b.real()) * md);
    u = u * turns;
    const LogComplex<T> cr = c * ratio;
    if (!cr.is_zero()) u = u + cr * kummer_m(a, b, base.to_complex(), tol);
    return u;
}

template LogComplex<double> kummer_m(const Complex<double>&, const Complex<double>&, const Complex<double>&,
                                     const Tolerance&);
template LogComplex<DD> kummer_m(const Complex<DD>&, const Complex<DD>&, const Complex<DD>&, const Tolerance&);
template LogComplex<double> gamma_times_u_base(const Complex<double>&, const Complex<double>&,
                                               const RiemannPoint<double>&, const Tolerance&);
template LogComplex<DD> gamma_times_u_base(const Complex<DD>&, const Complex<DD>&, const RiemannPoint<DD>&,
                                           const Tolerance&);
template LogComplex<double> kummer_u(const Complex<double>&, const Complex<double>&, const RiemannPoint<double>&,
                                     const Tolerance&);
template LogComplex<DD> kummer_u(const Complex<DD>&, const Complex<DD>&, const RiemannPoint<DD>&, const Tolerance&);

}  // namespace kasym::special
