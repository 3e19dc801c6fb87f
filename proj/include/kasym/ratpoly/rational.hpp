#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "kasym/numeric/double_double.hpp"

namespace kasym::ratpoly {

/// Arbitrary-precision rational, always canonical (lowest terms, q > 0).
using BigRational = mpq_class;

/// Accepts "p", "p/q" and "-p/q"; throws ParseError otherwise.
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& q);

/// Nearest double-double to q.
numeric::DoubleDouble rational_to_dd(const BigRational& q);

template <class T>
T rational_to(const BigRational& q);

template <>
inline numeric::DoubleDouble rational_to<numeric::DoubleDouble>(const BigRational& q) {
    return rational_to_dd(q);
}

template <>
inline double rational_to<double>(const BigRational& q) {
    return static_cast<double>(rational_to_dd(q));
}

}  // namespace kasym::ratpoly
