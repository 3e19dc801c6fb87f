#include "kasym/ratpoly/trunc_series.hpp"

#include <algorithm>
#include <utility>

#include "kasym/errors.hpp"

namespace kasym::ratpoly {

std::string_view series_var_name(SeriesVar v) { return v == SeriesVar::S ? "s" : "u^-2"; }

TruncSeries::TruncSeries(SeriesVar var, int order) : var_(var), order_(order) {
    if (order < 0) throw PreconditionError("series order must be non-negative");
    c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(SeriesVar var, int order, std::vector<CoeffPoly> coeffs)
    : TruncSeries(var, order) {
    if (coeffs.size() > c_.size()) coeffs.resize(c_.size());
    std::move(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncSeries TruncSeries::variable(SeriesVar var, int order) {
    TruncSeries r(var, order);
    if (order >= 1) r.c_[1] = CoeffPoly(ParamPoly(1));
    return r;
}

TruncSeries TruncSeries::constant(SeriesVar var, int order, const CoeffPoly& c) {
    TruncSeries r(var, order);
    r.c_[0] = c;
    return r;
}

TruncSeries TruncSeries::truncated(int order) const {
    if (order > order_) throw PreconditionError("cannot raise the order of a truncated series");
    return TruncSeries(var_, order, std::vector<CoeffPoly>(c_.begin(), c_.begin() + order + 1));
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (var_ != o.var_) {
        throw PreconditionError("series in " + std::string(series_var_name(var_)) + " and " +
                                std::string(series_var_name(o.var_)) + " cannot be combined");
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    const int n = std::min(a.order_, b.order_);
    TruncSeries r(a.var_, n);
    for (int k = 0; k <= n; ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    const int n = std::min(a.order_, b.order_);
    TruncSeries r(a.var_, n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::scaled(const CoeffPoly& c) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

// g = exp(f): n g_n = sum_{k=1}^n k f_k g_{n-k}
TruncSeries TruncSeries::exp() const {
    if (!c_[0].is_zero()) throw SeriesDomainError("exp needs a series with zero constant term");
    TruncSeries g(var_, order_);
    g.c_[0] = CoeffPoly(ParamPoly(1));
    for (int n = 1; n <= order_; ++n) {
        CoeffPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (coeff(k).is_zero()) continue;
            acc += (coeff(k) * g.coeff(n - k)).scaled(BigRational(k));
        }
        g.c_[static_cast<std::size_t>(n)] = acc.scaled(BigRational(1, static_cast<unsigned long>(n)));
    }
    return g;
}

// l = log(f), f_0 = 1: n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
TruncSeries TruncSeries::log() const {
    if (!(c_[0] == CoeffPoly(ParamPoly(1)))) throw SeriesDomainError("log needs a series with constant term 1");
    TruncSeries l(var_, order_);
    for (int n = 1; n <= order_; ++n) {
        CoeffPoly acc = coeff(n).scaled(BigRational(n));
        for (int k = 1; k < n; ++k) {
            if (l.coeff(k).is_zero()) continue;
            acc -= (l.coeff(k) * coeff(n - k)).scaled(BigRational(k));
        }
        l.c_[static_cast<std::size_t>(n)] = acc.scaled(BigRational(1, static_cast<unsigned long>(n)));
    }
    return l;
}

TruncSeries TruncSeries::pow(const ParamPoly& p) const { return log().scaled(CoeffPoly(p)).exp(); }

TruncSeries TruncSeries::reciprocal() const {
    const CoeffPoly& c0 = c_[0];
    if (c0.degree() != 0 || !c0.coeff(0).is_constant()) {
        throw SeriesDomainError("reciprocal needs a nonzero rational constant term");
    }
    const BigRational inv = BigRational(1) / c0.coeff(0).constant_term();
    TruncSeries g(var_, order_);
    g.c_[0] = CoeffPoly(ParamPoly(inv));
    for (int n = 1; n <= order_; ++n) {
        CoeffPoly acc;
        for (int k = 1; k <= n; ++k) acc += coeff(k) * g.coeff(n - k);
        g.c_[static_cast<std::size_t>(n)] = acc.scaled(-inv);
    }
    return g;
}

}  // namespace kasym::ratpoly
