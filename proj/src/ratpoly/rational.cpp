#include "kasym/ratpoly/rational.hpp"

#include <cctype>

#include "kasym/errors.hpp"

namespace kasym::ratpoly {
namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    BigRational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

numeric::DoubleDouble rational_to_dd(const BigRational& q) {
    const double hi = q.get_d();
    const BigRational rem = q - BigRational(hi);
    const double mid = rem.get_d();
    const BigRational rem2 = rem - BigRational(mid);
    // hi + mid may not be normalised when get_d truncates; from_parts fixes it
    return numeric::DoubleDouble::from_parts(hi, mid) + rem2.get_d();
}

}  // namespace kasym::ratpoly
