#pragma once

#include <cmath>
#include <string>

#include "kasym/special/kernels.hpp"

namespace kasym::special::detail {

using numeric::ScalarTraits;

template <class T>
T pi() {
    return ScalarTraits<T>::pi();
}

template <class T>
double to_d(const T& x) {
    return ScalarTraits<T>::to_double(x);
}

template <class T>
bool is_integer(const Complex<T>& z, long* n = nullptr) {
    using std::floor;
    if (z.imag() != T(0)) return false;
    if (floor(z.real()) != z.real()) return false;
    if (n) *n = static_cast<long>(to_d(z.real()));
    return true;
}

/// Neumaier-compensated complex accumulator.
template <class T>
class CompensatedSum {
public:
    void add(const Complex<T>& v) {
        step(sr_, cr_, v.real());
        step(si_, ci_, v.imag());
    }
    Complex<T> value() const { return {sr_ + cr_, si_ + ci_}; }
    void scale(int e) {
        using std::ldexp;
        sr_ = ldexp(sr_, e);
        cr_ = ldexp(cr_, e);
        si_ = ldexp(si_, e);
        ci_ = ldexp(ci_, e);
    }

private:
    static void step(T& s, T& c, const T& v) {
        const T t = s + v;
        if (numeric::abs_t(s) >= numeric::abs_t(v)) {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    }
    T sr_{0}, cr_{0}, si_{0}, ci_{0};
};

template <class T>
Complex<T> scale_pow2(const Complex<T>& z, int e) {
    using std::ldexp;
    return {ldexp(z.real(), e), ldexp(z.imag(), e)};
}

template <class T>
std::string fmt(const T& x) {
    return std::to_string(to_d(x));
}

}  // namespace kasym::special::detail
