#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kasym/ratpoly/rational.hpp"

namespace kasym::ratpoly {

/// The formal parameter a polynomial is written in.
enum class Param { Mu, B };

std::string_view param_name(Param p);

/// Univariate polynomial with rational coefficients in one formal parameter.
/// Constants carry a parameter tag but combine freely with either.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const BigRational& c, Param p = Param::Mu);  // NOLINT: constants convert implicitly
    ParamPoly(long c, Param p = Param::Mu);               // NOLINT
    ParamPoly(Param p, std::vector<BigRational> coeffs);

    static ParamPoly variable(Param p);

    Param param() const { return param_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of param^k (zero beyond the degree).
    BigRational coeff(int k) const;
    const std::vector<BigRational>& coefficients() const { return c_; }
    BigRational constant_term() const { return coeff(0); }

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
    ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

    /// Same coefficients; the parameter tag matters only for non-constants.
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

    ParamPoly scaled(const BigRational& s) const;

    /// Replace the parameter by `image` (which fixes the result's parameter).
    ParamPoly substitute(const ParamPoly& image) const;

    /// Exact quotient a / d; throws DivisibilityError on a nonzero remainder.
    ParamPoly divide_exact(const ParamPoly& d) const;

    /// Retag a constant; non-constants must already use `p`.
    ParamPoly with_param(Param p) const;

    template <class T>
    std::complex<T> evaluate(const std::complex<T>& x) const {
        std::complex<T> acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + std::complex<T>(rational_to<T>(*it), T(0));
        return acc;
    }

    /// Human-readable form, e.g. "1/6*mu - 1/6".
    std::string to_string() const;

private:
    void trim();

    Param param_ = Param::Mu;
    std::vector<BigRational> c_;
};

/// Parameter shared by two operands; throws MixedParameterError if both are
/// non-constant in different parameters.
Param common_param(const ParamPoly& a, const ParamPoly& b);

/// Falling-factorial binomial (x choose n) = x(x-1)...(x-n+1)/n! for a
/// polynomial x.
ParamPoly binomial(const ParamPoly& x, int n);

}  // namespace kasym::ratpoly
