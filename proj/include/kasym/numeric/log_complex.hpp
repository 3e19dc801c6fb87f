#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "kasym/errors.hpp"
#include "kasym/numeric/scalar.hpp"

namespace kasym::numeric {

/// A complex number exp(logmag + i*phase), or an exact zero. The phase is
/// never reduced, so products keep track of winding.
template <class T>
class LogComplex {
public:
    LogComplex() = default;  // zero

    static LogComplex zero() { return LogComplex(); }
    static LogComplex one() { return from_log(T(0), T(0)); }

    static LogComplex from_log(const T& logmag, const T& phase) {
        LogComplex r;
        r.logmag_ = logmag;
        r.phase_ = phase;
        r.zero_ = false;
        return r;
    }
    /// exp(w) for complex w.
    static LogComplex exp(const Complex<T>& w) { return from_log(w.real(), w.imag()); }

    static LogComplex from_complex(const Complex<T>& z) {
        if (z.real() == T(0) && z.imag() == T(0)) return zero();
        using std::log;
        return from_log(log(cabs(z)), carg(z));
    }
    static LogComplex from_real(const T& x) { return from_complex(Complex<T>(x, T(0))); }

    bool is_zero() const { return zero_; }
    const T& logmag() const { return logmag_; }
    const T& phase() const { return phase_; }

    bool representable() const { return zero_ || abs_t(logmag_) < T(700); }

    Complex<T> to_complex() const {
        if (zero_) return {};
        if (!representable()) throw PreconditionError("value magnitude outside native range");
        using std::cos;
        using std::exp;
        using std::sin;
        const T m = exp(logmag_);
        return {m * cos(phase_), m * sin(phase_)};
    }

    /// log of the value with the stored (unreduced) phase.
    Complex<T> log() const {
        if (zero_) throw PoleError("logarithm of zero");
        return {logmag_, phase_};
    }

    LogComplex operator-() const {
        if (zero_) return *this;
        return from_log(logmag_, phase_ + ScalarTraits<T>::pi());
    }

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
        if (a.zero_ || b.zero_) return zero();
        return from_log(a.logmag_ + b.logmag_, a.phase_ + b.phase_);
    }
    friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
        if (b.zero_) throw PoleError("division by zero");
        if (a.zero_) return zero();
        return from_log(a.logmag_ - b.logmag_, a.phase_ - b.phase_);
    }
    friend LogComplex operator*(const LogComplex& a, const Complex<T>& c) { return a * from_complex(c); }

    /// Sum, taken relative to the larger term; the result keeps the dominant
    /// term's winding.
    friend LogComplex operator+(const LogComplex& a, const LogComplex& b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        const LogComplex& big = a.logmag_ >= b.logmag_ ? a : b;
        const LogComplex& small = a.logmag_ >= b.logmag_ ? b : a;
        const T dl = small.logmag_ - big.logmag_;
        if (dl < T(-800)) return big;
        using std::cos;
        using std::exp;
        using std::log;
        using std::sin;
        const T m = exp(dl);
        const T dp = small.phase_ - big.phase_;
        const Complex<T> s(T(1) + m * cos(dp), m * sin(dp));
        if (s.real() == T(0) && s.imag() == T(0)) return zero();
        return from_log(big.logmag_ + log(cabs(s)), big.phase_ + carg(s));
    }
    friend LogComplex operator-(const LogComplex& a, const LogComplex& b) { return a + (-b); }

    LogComplex& operator*=(const LogComplex& b) { return *this = *this * b; }
    LogComplex& operator+=(const LogComplex& b) { return *this = *this + b; }

    template <class U>
    LogComplex<U> cast() const {
        if (zero_) return LogComplex<U>::zero();
        return LogComplex<U>::from_log(U(logmag_), U(phase_));
    }

private:
    T logmag_ = T(0);
    T phase_ = T(0);
    bool zero_ = true;
};

/// Phase reduced to (-pi, pi].
template <class T>
T principal_angle(const T& theta) {
    using std::floor;
    const T two_pi = ScalarTraits<T>::pi() * T(2);
    T r = theta - two_pi * floor(theta / two_pi + T(0.5));
    if (r <= -ScalarTraits<T>::pi()) r += two_pi;
    if (r > ScalarTraits<T>::pi()) r -= two_pi;
    return r;
}

/// |a/b - 1|, computed without forming the quotient in native range.
template <class T>
T relative_discrepancy(const LogComplex<T>& a, const LogComplex<T>& b) {
    if (b.is_zero()) {
        return a.is_zero() ? T(0) : T(std::numeric_limits<double>::infinity());
    }
    if (a.is_zero()) return T(1);
    using std::cos;
    using std::exp;
    using std::expm1;
    using std::sin;
    const T x = a.logmag() - b.logmag();
    const T y = principal_angle(a.phase() - b.phase());
    if (x > T(700)) return T(std::numeric_limits<double>::infinity());
    // e^{x+iy} - 1 = (expm1(x) cos y - 2 sin^2(y/2)) + i e^x sin y
    const T sh = sin(y / T(2));
    const T re = expm1(x) * cos(y) - T(2) * sh * sh;
    const T im = exp(x) * sin(y);
    using std::hypot;
    return hypot(re, im);
}

}  // namespace kasym::numeric
