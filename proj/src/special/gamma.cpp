#include <cmath>
#include <vector>

#include <gmpxx.h>

#include "detail.hpp"
#include "kasym/errors.hpp"
#include "kasym/ratpoly/rational.hpp"

namespace kasym::special {
namespace {

using detail::to_d;

// B_{2k}/(2k(2k-1)) for k = 1..count.
template <class T>
const std::vector<T>& stirling_coefficients() {
    static const std::vector<T> table = [] {
        const int count = 40;
        std::vector<mpq_class> B{1};
        for (int n = 1; n <= 2 * count; ++n) {
            mpq_class acc = 0;
            mpz_class binom = 1;
            for (int j = 0; j < n; ++j) {
                acc += mpq_class(binom) * B[static_cast<std::size_t>(j)];
                binom = binom * (n + 1 - j) / (j + 1);
            }
            B.push_back(-acc / (n + 1));
        }
        std::vector<T> out;
        for (int k = 1; k <= count; ++k) {
            mpq_class c = B[static_cast<std::size_t>(2 * k)] / mpq_class(2 * k * (2 * k - 1));
            c.canonicalize();
            out.push_back(ratpoly::rational_to<T>(c));
        }
        return out;
    }();
    return table;
}

template <class T>
double stirling_radius();
template <>
double stirling_radius<double>() {
    return 10.0;
}
template <>
double stirling_radius<numeric::DD>() {
    return 20.0;
}

}  // namespace

template <class T>
double bessel_switch_radius() {
    return std::log(1.0 / numeric::ScalarTraits<T>::epsilon) / 4.0;
}

template <class T>
Complex<T> log_gamma(const Complex<T>& w) {
    if (detail::is_integer(w) && w.real() <= T(0)) {
        throw PoleError("Gamma has a pole at " + detail::fmt(w.real()));
    }
    // Shift into Re z >= 0, |z| >= R, then lnG(w) = lnG(w+n) - sum log(w+k).
    const T R(stirling_radius<T>());
    Complex<T> z = w;
    Complex<T> shift;
    int steps = 0;
    while (z.real() < T(0) || numeric::cabs(z) < R) {
        shift += numeric::clog(z);
        z += T(1);
        if (++steps > 200000) throw PreconditionError("log_gamma argument too far left");
    }
    const T eps(numeric::ScalarTraits<T>::epsilon);
    using std::log;
    const T half_log_2pi = log(detail::pi<T>() * T(2)) / T(2);
    Complex<T> result = (z - T(0.5)) * numeric::clog(z) - z + half_log_2pi;
    const Complex<T> inv = T(1) / z;
    const Complex<T> inv2 = inv * inv;
    Complex<T> p = inv;
    for (const T& c : stirling_coefficients<T>()) {
        const Complex<T> term = p * c;
        result += term;
        if (numeric::cabs(term) < eps * numeric::cabs(result)) break;
        p *= inv2;
    }
    return result - shift;
}

template <class T>
LogComplex<T> reciprocal_gamma(const Complex<T>& w) {
    if (detail::is_integer(w) && w.real() <= T(0)) return LogComplex<T>::zero();
    return LogComplex<T>::exp(-log_gamma(w));
}

template double bessel_switch_radius<double>();
template double bessel_switch_radius<numeric::DD>();
template Complex<double> log_gamma(const Complex<double>&);
template Complex<numeric::DD> log_gamma(const Complex<numeric::DD>&);
template LogComplex<double> reciprocal_gamma(const Complex<double>&);
template LogComplex<numeric::DD> reciprocal_gamma(const Complex<numeric::DD>&);

}  // namespace kasym::special
