#include "kasym/special/special.hpp"

#include "kasym/special/kernels.hpp"

namespace kasym::special {
namespace {

using numeric::DD;
using numeric::PrecisionMode;
using numeric::to_complex_t;

Tolerance tolerance(const Precision& prec) {
    prec.validate();
    return Tolerance::from(prec);
}

bool use_dd(const Precision& prec) { return prec.mode == PrecisionMode::DoubleDouble; }

}  // namespace

std::complex<double> log_gamma(std::complex<double> w, const Precision& prec) {
    if (use_dd(prec)) return numeric::to_complex_double(log_gamma<DD>(to_complex_t<DD>(w)));
    return log_gamma<double>(w);
}

Value bessel_i(std::complex<double> nu, const Point& z, const Precision& prec) {
    const Tolerance t = tolerance(prec);
    if (use_dd(prec)) return bessel_i<DD>(to_complex_t<DD>(nu), z.cast<DD>(), t).cast<double>();
    return bessel_i<double>(nu, z, t);
}

Value bessel_k(std::complex<double> nu, const Point& z, const Precision& prec) {
    const Tolerance t = tolerance(prec);
    if (use_dd(prec)) return bessel_k<DD>(to_complex_t<DD>(nu), z.cast<DD>(), t).cast<double>();
    return bessel_k<double>(nu, z, t);
}

Value kummer_m(std::complex<double> a, std::complex<double> b, std::complex<double> x, const Precision& prec) {
    const Tolerance t = tolerance(prec);
    if (use_dd(prec)) {
        return kummer_m<DD>(to_complex_t<DD>(a), to_complex_t<DD>(b), to_complex_t<DD>(x), t).cast<double>();
    }
    return kummer_m<double>(a, b, x, t);
}

Value kummer_u(std::complex<double> a, std::complex<double> b, const Point& x, const Precision& prec) {
    const Tolerance t = tolerance(prec);
    if (use_dd(prec)) {
        return kummer_u<DD>(to_complex_t<DD>(a), to_complex_t<DD>(b), x.cast<DD>(), t).cast<double>();
    }
    return kummer_u<double>(a, b, x, t);
}

}  // namespace kasym::special
