#include "kasym/ratpoly/param_poly.hpp"

#include <utility>

#include "kasym/errors.hpp"

namespace kasym::ratpoly {

std::string_view param_name(Param p) { return p == Param::Mu ? "mu" : "b"; }

ParamPoly::ParamPoly(const BigRational& c, Param p) : param_(p) {
    if (c != 0) c_.push_back(c);
}

ParamPoly::ParamPoly(long c, Param p) : ParamPoly(BigRational(c), p) {}

ParamPoly::ParamPoly(Param p, std::vector<BigRational> coeffs) : param_(p), c_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::variable(Param p) { return ParamPoly(p, {0, 1}); }

void ParamPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational ParamPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Param common_param(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_constant()) return b.param();
    if (b.is_constant() || a.param() == b.param()) return a.param();
    throw MixedParameterError("cannot combine a polynomial in " + std::string(param_name(a.param())) +
                              " with one in " + std::string(param_name(b.param())));
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    const Param p = common_param(a, b);
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ParamPoly(p, std::move(c));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    const Param p = common_param(a, b);
    if (a.is_zero() || b.is_zero()) return ParamPoly(BigRational(0), p);
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ParamPoly(p, std::move(c));
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.c_ != b.c_) return false;
    return a.is_constant() || a.param_ == b.param_;
}

ParamPoly ParamPoly::scaled(const BigRational& s) const {
    ParamPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

ParamPoly ParamPoly::substitute(const ParamPoly& image) const {
    ParamPoly acc(BigRational(0), image.param());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * image + ParamPoly(*it, image.param());
    return acc.with_param(image.param());
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& d) const {
    if (d.is_zero()) throw DivisibilityError("division by the zero polynomial");
    const Param p = common_param(*this, d);
    std::vector<BigRational> rem = c_;
    const int dd = d.degree();
    const int qd = degree() - dd;
    if (qd < 0) {
        if (is_zero()) return ParamPoly(BigRational(0), p);
        throw DivisibilityError(to_string() + " is not divisible by " + d.to_string());
    }
    std::vector<BigRational> q(static_cast<std::size_t>(qd) + 1, 0);
    const BigRational lead = d.c_.back();
    for (int k = qd; k >= 0; --k) {
        const BigRational f = rem[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem) {
        if (r != 0) throw DivisibilityError(to_string() + " is not divisible by " + d.to_string());
    }
    return ParamPoly(p, std::move(q));
}

ParamPoly ParamPoly::with_param(Param p) const {
    if (!is_constant() && p != param_) {
        throw MixedParameterError("cannot retag a polynomial in " + std::string(param_name(param_)) +
                                  " without substitution");
    }
    ParamPoly r = *this;
    r.param_ = p;
    return r;
}

std::string ParamPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    const std::string var(param_name(param_));
    for (int k = degree(); k >= 0; --k) {
        const BigRational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigRational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += ratpoly::to_string(mag);
            continue;
        }
        if (mag != 1) out += ratpoly::to_string(mag) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

ParamPoly binomial(const ParamPoly& x, int n) {
    ParamPoly acc(BigRational(1), x.param());
    mpz_class fact = 1;
    for (int k = 0; k < n; ++k) {
        acc = acc * (x - ParamPoly(BigRational(k), x.param()));
        fact *= k + 1;
    }
    return acc.scaled(BigRational(1) / BigRational(fact));
}

}  // namespace kasym::ratpoly
