#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kasym/ratpoly/param_poly.hpp"

namespace kasym::ratpoly {

enum class Parity { Even, Odd, None };

std::string_view parity_name(Parity p);

/// Polynomial in z whose coefficients are ParamPoly values. The declared
/// parity is checked on construction and propagated by the operations.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(const ParamPoly& c);  // NOLINT: constants convert implicitly
    explicit CoeffPoly(std::vector<ParamPoly> coeffs, Parity declared = Parity::None);

    /// c * z^k, declared even or odd by k.
    static CoeffPoly monomial(const ParamPoly& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Parity parity() const { return parity_; }
    /// Coefficient of z^k (zero beyond the degree).
    ParamPoly coeff(int k) const;
    const std::vector<ParamPoly>& coefficients() const { return c_; }
    /// Value at z = 0.
    ParamPoly at_zero() const { return coeff(0); }
    /// Parameter used by the non-constant coefficients (Mu if none).
    Param param() const;

    /// Re-declare the parity; throws ParityError if the coefficients disagree.
    CoeffPoly with_parity(Parity p) const;
    /// Parity the coefficients actually have (Even for zero).
    Parity actual_parity() const;

    CoeffPoly operator-() const;
    friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    CoeffPoly& operator+=(const CoeffPoly& b) { return *this = *this + b; }
    CoeffPoly& operator-=(const CoeffPoly& b) { return *this = *this - b; }
    CoeffPoly& operator*=(const CoeffPoly& b) { return *this = *this * b; }

    /// Coefficientwise equality; declared parity is not compared.
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.c_ == b.c_; }

    CoeffPoly scaled(const BigRational& s) const;
    CoeffPoly scaled(const ParamPoly& s) const;

    CoeffPoly derivative() const;
    /// Antiderivative vanishing at z = 0.
    CoeffPoly integrate_from_zero() const;
    /// p / z; throws DivisibilityError unless the constant term is zero.
    CoeffPoly divide_by_z() const;
    /// Multiply by z^k.
    CoeffPoly shifted(int k) const;
    CoeffPoly substitute_param(const ParamPoly& image) const;
    /// Every coefficient divided exactly by d.
    CoeffPoly divide_exact(const ParamPoly& d) const;

    template <class T>
    std::complex<T> evaluate(const std::complex<T>& param_value, const std::complex<T>& z) const {
        std::complex<T> acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->evaluate(param_value);
        return acc;
    }

    /// Human-readable form, e.g. "(1/6*mu - 1/6)*z^2 + 1/72*z^6".
    std::string to_string() const;

private:
    void trim();
    void check_parity() const;

    std::vector<ParamPoly> c_;
    Parity parity_ = Parity::None;
};

/// Parity of a*b given the factors' parities.
Parity product_parity(Parity a, Parity b);
Parity flipped(Parity p);

}  // namespace kasym::ratpoly
