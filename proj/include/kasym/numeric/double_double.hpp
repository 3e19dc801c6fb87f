#pragma once

// Double-double ("dd") arithmetic: an unevaluated sum hi + lo of two IEEE
// doubles with |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.
// Algorithms follow the classic error-free transformations (Dekker, Knuth)
// as used in the QD library.

#ifdef __FAST_MATH__
#error "fast-math breaks the error-free transformations used by DoubleDouble"
#endif

#include <cmath>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kasym::numeric {

namespace eft {

inline constexpr double kSplitter = 134217729.0;  // 2^27 + 1

inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    err = b - (s - a);
}

inline void split(double a, double& hi, double& lo) {
    const double t = kSplitter * a;
    hi = t - (t - a);
    lo = a - hi;
}

inline void two_prod(double a, double b, double& p, double& err) {
    p = a * b;
#ifdef __FMA__
    err = std::fma(a, b, -p);
#else
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
#endif
}

}  // namespace eft

class DoubleDouble {
public:
    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design of a scalar
    template <std::integral I>
    constexpr DoubleDouble(I x) : hi_(static_cast<double>(x)), lo_(0.0) {}  // NOLINT

    /// Builds from a pre-normalised pair; renormalises defensively.
    static DoubleDouble from_parts(double hi, double lo) {
        DoubleDouble r;
        eft::quick_two_sum(hi, lo, r.hi_, r.lo_);
        return r;
    }

    double hi() const { return hi_; }
    double lo() const { return lo_; }
    explicit operator double() const { return hi_ + lo_; }

    DoubleDouble operator-() const { return raw(-hi_, -lo_); }

    DoubleDouble& operator+=(const DoubleDouble& b) { return *this = *this + b; }
    DoubleDouble& operator-=(const DoubleDouble& b) { return *this = *this - b; }
    DoubleDouble& operator*=(const DoubleDouble& b) { return *this = *this * b; }
    DoubleDouble& operator/=(const DoubleDouble& b) { return *this = *this / b; }

    friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
        double s1, s2, t1, t2;
        eft::two_sum(a.hi_, b.hi_, s1, s2);
        eft::two_sum(a.lo_, b.lo_, t1, t2);
        s2 += t1;
        eft::quick_two_sum(s1, s2, s1, s2);
        s2 += t2;
        DoubleDouble r;
        eft::quick_two_sum(s1, s2, r.hi_, r.lo_);
        return r;
    }
    friend DoubleDouble operator+(const DoubleDouble& a, double b) {
        double s1, s2;
        eft::two_sum(a.hi_, b, s1, s2);
        s2 += a.lo_;
        DoubleDouble r;
        eft::quick_two_sum(s1, s2, r.hi_, r.lo_);
        return r;
    }
    friend DoubleDouble operator+(double a, const DoubleDouble& b) { return b + a; }

    friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
    friend DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }
    friend DoubleDouble operator-(double a, const DoubleDouble& b) { return (-b) + a; }

    friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
        double p1, p2;
        eft::two_prod(a.hi_, b.hi_, p1, p2);
        p2 += a.hi_ * b.lo_ + a.lo_ * b.hi_;
        DoubleDouble r;
        eft::quick_two_sum(p1, p2, r.hi_, r.lo_);
        return r;
    }
    friend DoubleDouble operator*(const DoubleDouble& a, double b) {
        double p1, p2;
        eft::two_prod(a.hi_, b, p1, p2);
        p2 += a.lo_ * b;
        DoubleDouble r;
        eft::quick_two_sum(p1, p2, r.hi_, r.lo_);
        return r;
    }
    friend DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

    friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
        const double q1 = a.hi_ / b.hi_;
        DoubleDouble r = a - b * q1;
        const double q2 = r.hi_ / b.hi_;
        r -= b * q2;
        const double q3 = r.hi_ / b.hi_;
        DoubleDouble q;
        eft::quick_two_sum(q1, q2, q.hi_, q.lo_);
        return q + q3;
    }
    friend DoubleDouble operator/(const DoubleDouble& a, double b) { return a / DoubleDouble(b); }
    friend DoubleDouble operator/(double a, const DoubleDouble& b) { return DoubleDouble(a) / b; }

    friend bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
        return a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }
    friend std::partial_ordering operator<=>(const DoubleDouble& a, const DoubleDouble& b) {
        if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
        return a.lo_ <=> b.lo_;
    }

private:
    static constexpr DoubleDouble raw(double hi, double lo) {
        DoubleDouble r;
        r.hi_ = hi;
        r.lo_ = lo;
        return r;
    }

    double hi_ = 0.0;
    double lo_ = 0.0;
};

// Free functions found by ADL (std::complex<DoubleDouble> relies on them).
DoubleDouble abs(const DoubleDouble& a);
DoubleDouble fabs(const DoubleDouble& a);
DoubleDouble sqrt(const DoubleDouble& a);
DoubleDouble exp(const DoubleDouble& a);
DoubleDouble expm1(const DoubleDouble& a);
DoubleDouble log(const DoubleDouble& a);
DoubleDouble log1p(const DoubleDouble& a);
DoubleDouble sin(const DoubleDouble& a);
DoubleDouble cos(const DoubleDouble& a);
void sincos(const DoubleDouble& a, DoubleDouble& s, DoubleDouble& c);
DoubleDouble sinh(const DoubleDouble& a);
DoubleDouble cosh(const DoubleDouble& a);
DoubleDouble atan2(const DoubleDouble& y, const DoubleDouble& x);
DoubleDouble pow(const DoubleDouble& a, const DoubleDouble& b);
DoubleDouble floor(const DoubleDouble& a);
DoubleDouble ceil(const DoubleDouble& a);
DoubleDouble nearbyint(const DoubleDouble& a);
DoubleDouble ldexp(const DoubleDouble& a, int e);
DoubleDouble hypot(const DoubleDouble& a, const DoubleDouble& b);
bool isfinite(const DoubleDouble& a);
bool isnan(const DoubleDouble& a);

/// Parses a decimal literal ("-3.1415e-2") to full double-double accuracy.
DoubleDouble parse_double_double(std::string_view text);

/// Decimal rendering with `digits` significant digits (digits <= 34).
std::string to_string(const DoubleDouble& a, int digits = 32);

std::ostream& operator<<(std::ostream& os, const DoubleDouble& a);

}  // namespace kasym::numeric
