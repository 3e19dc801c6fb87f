#pragma once

// Scalar-generic kernels, instantiated for double and DoubleDouble.

#include "kasym/numeric/log_complex.hpp"
#include "kasym/numeric/precision.hpp"
#include "kasym/numeric/riemann_point.hpp"
#include "kasym/numeric/scalar.hpp"

namespace kasym::special {

using numeric::Complex;
using numeric::LogComplex;
using numeric::RiemannPoint;

struct Tolerance {
    double series = 1e-31;
    double quad = 1e-20;
    /// Largest acceptable estimated relative error of a result.
    double budget = 1e-10;

    static Tolerance from(const numeric::Precision& p) { return {p.series_tol, p.quad_tol, p.error_budget()}; }
};

/// Radius beyond which the large-argument Bessel expansions are used:
/// their optimal truncation error e^{-2|w|} is then below sqrt(eps).
template <class T>
double bessel_switch_radius();

/// Principal branch of log Gamma(w).
template <class T>
Complex<T> log_gamma(const Complex<T>& w);

/// 1/Gamma(w), exactly zero at the poles.
template <class T>
LogComplex<T> reciprocal_gamma(const Complex<T>& w);

/// I_nu(z) on the Riemann surface.
template <class T>
LogComplex<T> bessel_i(const Complex<T>& nu, const RiemannPoint<T>& z, const Tolerance& tol);

/// K_nu(z) on the Riemann surface.
template <class T>
LogComplex<T> bessel_k(const Complex<T>& nu, const RiemannPoint<T>& z, const Tolerance& tol);

/// M(a, b, x) by its ascending series.
template <class T>
LogComplex<T> kummer_m(const Complex<T>& a, const Complex<T>& b, const Complex<T>& x, const Tolerance& tol);

/// U(a, b, x) on the Riemann surface: quadrature of the Laplace-type
/// integral at the base sheet, then whole turns by the monodromy relation.
template <class T>
LogComplex<T> kummer_u(const Complex<T>& a, const Complex<T>& b, const RiemannPoint<T>& x, const Tolerance& tol);

/// Gamma(a) U(a, b, x) for arg x in (-pi, pi] (no monodromy applied).
template <class T>
LogComplex<T> gamma_times_u_base(const Complex<T>& a, const Complex<T>& b, const RiemannPoint<T>& x,
                                 const Tolerance& tol);

}  // namespace kasym::special
