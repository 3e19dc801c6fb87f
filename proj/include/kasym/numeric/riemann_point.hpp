#pragma once

#include <cmath>

#include "kasym/errors.hpp"
#include "kasym/numeric/scalar.hpp"

namespace kasym::numeric {

/// Point r*e^{i theta} on the Riemann surface of the logarithm. theta keeps
/// its full winding.
template <class T>
class RiemannPoint {
public:
    RiemannPoint(const T& r, const T& theta) : r_(r), theta_(theta) {
        if (!(r > T(0))) throw PreconditionError("RiemannPoint needs r > 0");
    }

    const T& r() const { return r_; }
    const T& theta() const { return theta_; }

    Complex<T> log() const {
        using std::log;
        return {log(r_), theta_};
    }
    Complex<T> to_complex() const {
        using std::cos;
        using std::sin;
        return {r_ * cos(theta_), r_ * sin(theta_)};
    }

    friend RiemannPoint operator*(const RiemannPoint& a, const RiemannPoint& b) {
        return {a.r_ * b.r_, a.theta_ + b.theta_};
    }
    RiemannPoint squared() const { return {r_ * r_, theta_ * T(2)}; }

    template <class U>
    RiemannPoint<U> cast() const {
        return {U(r_), U(theta_)};
    }

private:
    T r_;
    T theta_;
};

}  // namespace kasym::numeric
