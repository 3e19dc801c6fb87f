#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "kasym/numeric/double_double.hpp"

namespace kasym::numeric {

using DD = DoubleDouble;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr double epsilon = 1.1102230246251565e-16;  // 2^-53
    static constexpr const char* name = "double";
    static double pi() { return 3.14159265358979323846; }
    static double ln2() { return 0.69314718055994530942; }
    static double euler_gamma() { return 0.57721566490153286061; }
    static double from_string(std::string_view s) { return static_cast<double>(parse_double_double(s)); }
    static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<DoubleDouble> {
    static constexpr double epsilon = 4.93038065763132e-32;  // 2^-104
    static constexpr const char* name = "dd";
    static const DoubleDouble& pi();
    static const DoubleDouble& ln2();
    static const DoubleDouble& euler_gamma();
    static DoubleDouble from_string(std::string_view s) { return parse_double_double(s); }
    static double to_double(const DoubleDouble& x) { return static_cast<double>(x); }
};

template <class T>
using Complex = std::complex<T>;

template <class T>
T to_scalar(double x) {
    return T(x);
}

template <class T>
Complex<T> to_complex_t(std::complex<double> z) {
    return {T(z.real()), T(z.imag())};
}

template <class T>
std::complex<double> to_complex_double(const Complex<T>& z) {
    return {ScalarTraits<T>::to_double(z.real()), ScalarTraits<T>::to_double(z.imag())};
}

template <class T>
T abs_t(const T& x) {
    return x < T(0) ? -x : x;
}

template <class T>
T cabs(const Complex<T>& z) {
    using std::hypot;
    return hypot(z.real(), z.imag());
}

template <class T>
T carg(const Complex<T>& z) {
    using std::atan2;
    return atan2(z.imag(), z.real());
}

/// Principal complex logarithm.
template <class T>
Complex<T> clog(const Complex<T>& z) {
    using std::log;
    return {log(cabs(z)), carg(z)};
}

template <class T>
Complex<T> cexp(const Complex<T>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    const T m = exp(z.real());
    return {m * cos(z.imag()), m * sin(z.imag())};
}

template <class T>
Complex<T> csqrt(const Complex<T>& z) {
    using std::sqrt;
    const T r = cabs(z);
    if (r == T(0)) return {};
    const T re = sqrt((r + abs_t(z.real())) / T(2));
    if (z.real() >= T(0)) return {re, z.imag() / (T(2) * re)};
    return {abs_t(z.imag()) / (T(2) * re), z.imag() < T(0) ? -re : re};
}

/// sin(pi x) with exact argument reduction on x.
template <class T>
T sin_pi(const T& x) {
    using std::floor;
    using std::sin;
    using std::cos;
    const T n = floor(x * T(2) + T(0.5));  // nearest half-integer multiple
    const T r = x - n / T(2);              // |r| <= 1/4
    const T s = sin(ScalarTraits<T>::pi() * r);
    const T c = cos(ScalarTraits<T>::pi() * r);
    long long k = static_cast<long long>(ScalarTraits<T>::to_double(n));
    switch (((k % 4) + 4) % 4) {
        case 0: return s;
        case 1: return c;
        case 2: return -s;
        default: return -c;
    }
}

template <class T>
T cos_pi(const T& x) {
    return sin_pi(x + T(0.5));
}

/// Complex sin(pi z).
template <class T>
Complex<T> csin_pi(const Complex<T>& z) {
    using std::cosh;
    using std::sinh;
    const T y = ScalarTraits<T>::pi() * z.imag();
    return {sin_pi(z.real()) * cosh(y), cos_pi(z.real()) * sinh(y)};
}

template <class T>
Complex<T> ccos_pi(const Complex<T>& z) {
    using std::cosh;
    using std::sinh;
    const T y = ScalarTraits<T>::pi() * z.imag();
    return {cos_pi(z.real()) * cosh(y), -sin_pi(z.real()) * sinh(y)};
}

}  // namespace kasym::numeric
