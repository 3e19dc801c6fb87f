#include "kasym/numeric/double_double.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kasym::numeric {
namespace {

// hi/lo splits of the constants, correct to ~1e-33.
const DoubleDouble kTwoPi = DoubleDouble::from_parts(6.283185307179586232e+00, 2.449293598294706414e-16);
const DoubleDouble kPiHalf = DoubleDouble::from_parts(1.570796326794896558e+00, 6.123233995736766036e-17);
const DoubleDouble kPiQuarter = DoubleDouble::from_parts(7.853981633974482790e-01, 3.061616997868383018e-17);
const DoubleDouble kLog2 = DoubleDouble::from_parts(6.931471805599452862e-01, 2.319046813846299558e-17);

constexpr double kEps = 4.93038065763132e-32;  // 2^-104

DoubleDouble sqr(const DoubleDouble& a) { return a * a; }

// 1/k! for k = 3..20
const std::array<DoubleDouble, 18>& inverse_factorials() {
    static const std::array<DoubleDouble, 18> table = [] {
        std::array<DoubleDouble, 18> t{};
        DoubleDouble f = 2.0;
        for (int k = 3; k < 21; ++k) {
            f *= static_cast<double>(k);
            t[static_cast<std::size_t>(k - 3)] = DoubleDouble(1.0) / f;
        }
        return t;
    }();
    return table;
}

// Taylor series on |t| <= pi/4.
void sincos_taylor(const DoubleDouble& t, DoubleDouble& s, DoubleDouble& c) {
    if (t.hi() == 0.0) {
        s = 0.0;
        c = 1.0;
        return;
    }
    const DoubleDouble x2 = -sqr(t);
    // sin
    DoubleDouble term = t;
    DoubleDouble sum = t;
    for (int k = 1; k < 30; ++k) {
        term = term * x2 / static_cast<double>((2 * k) * (2 * k + 1));
        sum += term;
        if (std::abs(term.hi()) < kEps * std::abs(sum.hi()) * 0.5) break;
    }
    s = sum;
    // cos
    term = 1.0;
    sum = 1.0;
    for (int k = 1; k < 30; ++k) {
        term = term * x2 / static_cast<double>((2 * k - 1) * (2 * k));
        sum += term;
        if (std::abs(term.hi()) < kEps * 0.5) break;
    }
    c = sum;
}

}  // namespace

DoubleDouble abs(const DoubleDouble& a) { return a.hi() < 0.0 ? -a : a; }
DoubleDouble fabs(const DoubleDouble& a) { return abs(a); }

DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi() == 0.0) return 0.0;
    if (a.hi() < 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double x = 1.0 / std::sqrt(a.hi());
    const double ax = a.hi() * x;
    const DoubleDouble axd(ax);
    return axd + (a - axd * axd).hi() * (x * 0.5);
}

DoubleDouble ldexp(const DoubleDouble& a, int e) {
    return DoubleDouble::from_parts(std::ldexp(a.hi(), e), std::ldexp(a.lo(), e));
}

DoubleDouble exp(const DoubleDouble& a) {
    if (a.hi() > 709.78) return std::numeric_limits<double>::infinity();
    if (a.hi() < -745.0) return 0.0;
    if (a.hi() == 0.0) return 1.0;

    const double m = std::floor(a.hi() / kLog2.hi() + 0.5);
    constexpr double inv_k = 1.0 / 512.0;
    const DoubleDouble r = ldexp(a - kLog2 * m, -9);

    const auto& inv_fact = inverse_factorials();
    DoubleDouble p = sqr(r);
    DoubleDouble s = r + ldexp(p, -1);
    p *= r;
    DoubleDouble t = p * inv_fact[0];
    std::size_t i = 0;
    do {
        s += t;
        p *= r;
        ++i;
        t = p * inv_fact[i];
    } while (std::abs(t.hi()) > inv_k * kEps && i < 10);
    s += t;

    // (1 + s)^512 - 1 by repeated squaring of e^r - 1
    for (int k = 0; k < 9; ++k) s = ldexp(s, 1) + sqr(s);
    s += 1.0;
    return ldexp(s, static_cast<int>(m));
}

DoubleDouble expm1(const DoubleDouble& a) {
    if (std::abs(a.hi()) > 0.5) return exp(a) - 1.0;
    DoubleDouble term = a;
    DoubleDouble sum = a;
    for (int k = 2; k < 60; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
        if (std::abs(term.hi()) <= kEps * std::abs(sum.hi()) * 0.25) break;
    }
    return sum;
}

DoubleDouble log(const DoubleDouble& a) {
    if (a.hi() == 1.0 && a.lo() == 0.0) return 0.0;
    if (a.hi() <= 0.0) {
        return a.hi() == 0.0 ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isinf(a.hi())) return a.hi();
    // log a = log f + e ln 2 with f in [1/2, 1), keeping the Newton step in range
    int e = 0;
    std::frexp(a.hi(), &e);
    const DoubleDouble f = ldexp(a, -e);
    DoubleDouble x = std::log(f.hi());
    x = x + f * exp(-x) - 1.0;
    return x + kLog2 * static_cast<double>(e);
}

DoubleDouble log1p(const DoubleDouble& a) {
    if (std::abs(a.hi()) < 1e-3) {
        // log(1+a) = 2 atanh(a/(2+a))
        const DoubleDouble y = a / (a + 2.0);
        const DoubleDouble y2 = y * y;
        DoubleDouble term = y;
        DoubleDouble sum = y;
        for (int k = 3; k < 80; k += 2) {
            term *= y2;
            const DoubleDouble add = term / static_cast<double>(k);
            sum += add;
            if (std::abs(add.hi()) <= kEps * std::abs(sum.hi()) * 0.25) break;
        }
        return ldexp(sum, 1);
    }
    return log(a + 1.0);
}

void sincos(const DoubleDouble& a, DoubleDouble& s, DoubleDouble& c) {
    if (a.hi() == 0.0) {
        s = 0.0;
        c = 1.0;
        return;
    }
    const DoubleDouble z = nearbyint(a / kTwoPi);
    const DoubleDouble r = a - kTwoPi * z;
    const double q = std::floor(r.hi() / kPiHalf.hi() + 0.5);
    const DoubleDouble t = r - kPiHalf * q;
    const int j = static_cast<int>(q);
    DoubleDouble st, ct;
    sincos_taylor(t, st, ct);
    switch (((j % 4) + 4) % 4) {
        case 0: s = st; c = ct; break;
        case 1: s = ct; c = -st; break;
        case 2: s = -st; c = -ct; break;
        default: s = -ct; c = st; break;
    }
}

DoubleDouble sin(const DoubleDouble& a) {
    DoubleDouble s, c;
    sincos(a, s, c);
    return s;
}

DoubleDouble cos(const DoubleDouble& a) {
    DoubleDouble s, c;
    sincos(a, s, c);
    return c;
}

DoubleDouble sinh(const DoubleDouble& a) {
    if (std::abs(a.hi()) < 0.5) {
        const DoubleDouble em = expm1(a);
        return ldexp(em + em / (em + 1.0), -1);
    }
    const DoubleDouble e = exp(a);
    return ldexp(e - 1.0 / e, -1);
}

DoubleDouble cosh(const DoubleDouble& a) {
    const DoubleDouble e = exp(a);
    return ldexp(e + 1.0 / e, -1);
}

DoubleDouble atan2(const DoubleDouble& y, const DoubleDouble& x) {
    if (x.hi() == 0.0) {
        if (y.hi() == 0.0) return 0.0;
        return y.hi() > 0.0 ? kPiHalf : -kPiHalf;
    }
    if (y.hi() == 0.0) return x.hi() > 0.0 ? DoubleDouble(0.0) : ldexp(kTwoPi, -1);
    if (x == y) return y.hi() > 0.0 ? kPiQuarter : -(kPiQuarter * 3.0);
    if (x == -y) return y.hi() > 0.0 ? kPiQuarter * 3.0 : -kPiQuarter;

    const DoubleDouble r = sqrt(x * x + y * y);
    const DoubleDouble xx = x / r;
    const DoubleDouble yy = y / r;
    DoubleDouble z = std::atan2(y.hi(), x.hi());
    DoubleDouble sz, cz;
    sincos(z, sz, cz);
    if (std::abs(xx.hi()) > std::abs(yy.hi())) {
        z += (yy - sz) / cz;
    } else {
        z -= (xx - cz) / sz;
    }
    return z;
}

DoubleDouble pow(const DoubleDouble& a, const DoubleDouble& b) { return exp(b * log(a)); }

DoubleDouble floor(const DoubleDouble& a) {
    double hi = std::floor(a.hi());
    double lo = 0.0;
    if (hi == a.hi()) lo = std::floor(a.lo());
    return DoubleDouble::from_parts(hi, lo);
}

DoubleDouble ceil(const DoubleDouble& a) { return -floor(-a); }

DoubleDouble nearbyint(const DoubleDouble& a) {
    double hi = std::nearbyint(a.hi());
    double lo = 0.0;
    if (hi == a.hi()) {
        lo = std::nearbyint(a.lo());
    } else if (std::abs(hi - a.hi()) == 0.5 && a.lo() < 0.0) {
        hi -= 1.0;
    }
    return DoubleDouble::from_parts(hi, lo);
}

DoubleDouble hypot(const DoubleDouble& a, const DoubleDouble& b) {
    const DoubleDouble aa = abs(a);
    const DoubleDouble bb = abs(b);
    const DoubleDouble big = aa > bb ? aa : bb;
    if (big.hi() == 0.0) return 0.0;
    const DoubleDouble small = aa > bb ? bb : aa;
    const DoubleDouble ratio = small / big;
    return big * sqrt(ratio * ratio + 1.0);
}

bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi()); }
bool isnan(const DoubleDouble& a) { return std::isnan(a.hi()); }

namespace {

DoubleDouble power_of_ten(int n) {
    DoubleDouble result = 1.0;
    DoubleDouble base = 10.0;
    unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
    while (k != 0) {
        if (k & 1U) result *= base;
        base *= base;
        k >>= 1U;
    }
    return n < 0 ? DoubleDouble(1.0) / result : result;
}

}  // namespace

DoubleDouble parse_double_double(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    DoubleDouble mantissa = 0.0;
    int exponent = 0;
    int digits = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '.') {
            if (seen_point) throw std::invalid_argument("malformed decimal literal");
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) break;
        mantissa = mantissa * 10.0 + static_cast<double>(ch - '0');
        ++digits;
        if (seen_point) --exponent;
    }
    if (digits == 0) throw std::invalid_argument("malformed decimal literal");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        exponent += std::stoi(std::string(text.substr(i + 1)));
    } else if (i != text.size()) {
        throw std::invalid_argument("malformed decimal literal");
    }
    DoubleDouble value = exponent >= 0 ? mantissa * power_of_ten(exponent)
                                       : mantissa / power_of_ten(-exponent);
    return negative ? -value : value;
}

std::string to_string(const DoubleDouble& a, int digits) {
    if (std::isnan(a.hi())) return "nan";
    if (std::isinf(a.hi())) return a.hi() > 0 ? "inf" : "-inf";
    if (a.hi() == 0.0) return "0";
    if (digits < 1) digits = 1;
    if (digits > 34) digits = 34;

    std::string out;
    DoubleDouble r = abs(a);
    if (a.hi() < 0.0) out.push_back('-');
    int e = static_cast<int>(std::floor(std::log10(r.hi())));
    r = e >= 0 ? r / power_of_ten(e) : r * power_of_ten(-e);
    if (r.hi() >= 10.0) {
        r /= 10.0;
        ++e;
    } else if (r.hi() < 1.0) {
        r *= 10.0;
        --e;
    }
    std::string mant;
    for (int k = 0; k <= digits; ++k) {
        const double d = std::floor(r.hi());
        const int digit = std::clamp(static_cast<int>(d), 0, 9);
        mant.push_back(static_cast<char>('0' + digit));
        r = (r - static_cast<double>(digit)) * 10.0;
    }
    // round on the guard digit
    const bool round_up = mant.back() >= '5';
    mant.pop_back();
    if (round_up) {
        int k = static_cast<int>(mant.size()) - 1;
        while (k >= 0 && mant[static_cast<std::size_t>(k)] == '9') mant[static_cast<std::size_t>(k--)] = '0';
        if (k < 0) {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++e;
        } else {
            ++mant[static_cast<std::size_t>(k)];
        }
    }
    out.push_back(mant[0]);
    if (mant.size() > 1) {
        out.push_back('.');
        out.append(mant, 1);
    }
    out += "e" + std::to_string(e);
    return out;
}

std::ostream& operator<<(std::ostream& os, const DoubleDouble& a) {
    return os << to_string(a, static_cast<int>(os.precision() > 0 ? os.precision() : 32));
}

}  // namespace kasym::numeric
