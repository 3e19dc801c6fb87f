#pragma once

#include <string_view>
#include <vector>

#include "kasym/ratpoly/coeff_poly.hpp"

namespace kasym::ratpoly {

/// Expansion variable of a truncated series.
enum class SeriesVar { S, InvU2 };

std::string_view series_var_name(SeriesVar v);

/// Power series c_0 + c_1 v + ... + c_S v^S, exact modulo v^{S+1}.
class TruncSeries {
public:
    TruncSeries(SeriesVar var, int order);  // zero series
    TruncSeries(SeriesVar var, int order, std::vector<CoeffPoly> coeffs);

    /// The series v itself, truncated at `order`.
    static TruncSeries variable(SeriesVar var, int order);
    static TruncSeries constant(SeriesVar var, int order, const CoeffPoly& c);

    SeriesVar var() const { return var_; }
    int order() const { return order_; }
    const CoeffPoly& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<CoeffPoly>& coefficients() const { return c_; }

    /// Drop terms above `order` (which must not exceed the current order).
    TruncSeries truncated(int order) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    /// Product, truncated at the smaller order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    TruncSeries scaled(const CoeffPoly& c) const;

    /// exp of a series with zero constant term.
    TruncSeries exp() const;
    /// log of a series with constant term 1.
    TruncSeries log() const;
    /// exp(p * log(self)) for a series with constant term 1.
    TruncSeries pow(const ParamPoly& p) const;
    /// 1/self for a series whose constant term is a nonzero rational.
    TruncSeries reciprocal() const;

private:
    void check_compatible(const TruncSeries& o) const;

    SeriesVar var_;
    int order_;
    std::vector<CoeffPoly> c_;
};

}  // namespace kasym::ratpoly
