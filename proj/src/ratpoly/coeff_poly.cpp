#include "kasym/ratpoly/coeff_poly.hpp"

#include <utility>

#include "kasym/errors.hpp"

namespace kasym::ratpoly {

std::string_view parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "none";
    }
}

Parity product_parity(Parity a, Parity b) {
    if (a == Parity::None || b == Parity::None) return Parity::None;
    return a == b ? Parity::Even : Parity::Odd;
}

Parity flipped(Parity p) {
    if (p == Parity::Even) return Parity::Odd;
    if (p == Parity::Odd) return Parity::Even;
    return Parity::None;
}

CoeffPoly::CoeffPoly(const ParamPoly& c) : parity_(Parity::Even) {
    if (!c.is_zero()) c_.push_back(c);
}

CoeffPoly::CoeffPoly(std::vector<ParamPoly> coeffs, Parity declared) : c_(std::move(coeffs)), parity_(declared) {
    trim();
    check_parity();
}

CoeffPoly CoeffPoly::monomial(const ParamPoly& c, int k) {
    if (c.is_zero()) return CoeffPoly();
    std::vector<ParamPoly> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return CoeffPoly(std::move(v), k % 2 == 0 ? Parity::Even : Parity::Odd);
}

void CoeffPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void CoeffPoly::check_parity() const {
    if (parity_ == Parity::None) return;
    const std::size_t bad = parity_ == Parity::Even ? 1 : 0;
    for (std::size_t k = bad; k < c_.size(); k += 2) {
        if (!c_[k].is_zero()) {
            throw ParityError("polynomial declared " + std::string(parity_name(parity_)) + " has a nonzero z^" +
                              std::to_string(k) + " coefficient");
        }
    }
}

ParamPoly CoeffPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ParamPoly(BigRational(0), param());
    return c_[static_cast<std::size_t>(k)];
}

Param CoeffPoly::param() const {
    for (const auto& c : c_) {
        if (!c.is_constant()) return c.param();
    }
    return c_.empty() ? Param::Mu : c_.front().param();
}

CoeffPoly CoeffPoly::with_parity(Parity p) const {
    CoeffPoly r = *this;
    r.parity_ = p;
    r.check_parity();
    return r;
}

Parity CoeffPoly::actual_parity() const {
    bool even = true;
    bool odd = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        (k % 2 == 0 ? odd : even) = false;
    }
    if (even) return Parity::Even;
    return odd ? Parity::Odd : Parity::None;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {

Parity sum_parity(const CoeffPoly& a, const CoeffPoly& b) {
    if (a.is_zero()) return b.parity();
    if (b.is_zero()) return a.parity();
    return a.parity() == b.parity() ? a.parity() : Parity::None;
}

}  // namespace

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
    std::vector<ParamPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return CoeffPoly(std::move(c), sum_parity(a, b));
}

CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) { return a + (-b); }

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    if (a.is_zero() || b.is_zero()) return CoeffPoly();
    std::vector<ParamPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return CoeffPoly(std::move(c), product_parity(a.parity_, b.parity_));
}

CoeffPoly CoeffPoly::scaled(const BigRational& s) const {
    if (s == 0) return CoeffPoly();
    CoeffPoly r = *this;
    for (auto& c : r.c_) c = c.scaled(s);
    return r;
}

CoeffPoly CoeffPoly::scaled(const ParamPoly& s) const {
    std::vector<ParamPoly> c = c_;
    for (auto& x : c) x = x * s;
    return CoeffPoly(std::move(c), parity_);
}

CoeffPoly CoeffPoly::derivative() const {
    if (c_.size() <= 1) return CoeffPoly();
    std::vector<ParamPoly> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k].scaled(BigRational(static_cast<long>(k)));
    return CoeffPoly(std::move(c), flipped(parity_));
}

CoeffPoly CoeffPoly::integrate_from_zero() const {
    if (c_.empty()) return CoeffPoly();
    std::vector<ParamPoly> c(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c[k + 1] = c_[k].scaled(BigRational(1, static_cast<unsigned long>(k + 1)));
    }
    return CoeffPoly(std::move(c), flipped(parity_));
}

CoeffPoly CoeffPoly::divide_by_z() const {
    if (c_.empty()) return CoeffPoly();
    if (!c_.front().is_zero()) {
        throw DivisibilityError("polynomial with constant term " + c_.front().to_string() +
                                " is not divisible by z");
    }
    return CoeffPoly(std::vector<ParamPoly>(c_.begin() + 1, c_.end()), flipped(parity_));
}

CoeffPoly CoeffPoly::shifted(int k) const {
    if (c_.empty()) return CoeffPoly();
    std::vector<ParamPoly> c(static_cast<std::size_t>(k));
    c.insert(c.end(), c_.begin(), c_.end());
    return CoeffPoly(std::move(c), k % 2 == 0 ? parity_ : flipped(parity_));
}

CoeffPoly CoeffPoly::substitute_param(const ParamPoly& image) const {
    std::vector<ParamPoly> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.substitute(image));
    return CoeffPoly(std::move(c), parity_);
}

CoeffPoly CoeffPoly::divide_exact(const ParamPoly& d) const {
    std::vector<ParamPoly> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.divide_exact(d));
    return CoeffPoly(std::move(c), parity_);
}

std::string CoeffPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const ParamPoly& c = c_[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = c.to_string();
        if (k == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += c.is_constant() && cs.front() != '-' ? cs + "*" : "(" + cs + ")*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace kasym::ratpoly
