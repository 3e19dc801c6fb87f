#pragma once

// Double-valued entry points. Each evaluates in the arithmetic chosen by
// `prec` and rounds the result.

#include <complex>

#include "kasym/numeric/log_complex.hpp"
#include "kasym/numeric/precision.hpp"
#include "kasym/numeric/riemann_point.hpp"

namespace kasym::special {

using Value = numeric::LogComplex<double>;
using Point = numeric::RiemannPoint<double>;
using numeric::Precision;

std::complex<double> log_gamma(std::complex<double> w, const Precision& prec);

Value bessel_i(std::complex<double> nu, const Point& z, const Precision& prec);
Value bessel_k(std::complex<double> nu, const Point& z, const Precision& prec);

Value kummer_m(std::complex<double> a, std::complex<double> b, std::complex<double> x, const Precision& prec);
Value kummer_u(std::complex<double> a, std::complex<double> b, const Point& x, const Precision& prec);

}  // namespace kasym::special
