#include "kasym/expansion/expansion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include "kasym/errors.hpp"
#include "kasym/special/kernels.hpp"
#include "kasym/temme/coefficients.hpp"

namespace kasym::expansion {
namespace {

using numeric::Complex;
using numeric::DD;
using numeric::LogComplex;
using numeric::PrecisionMode;
using numeric::RiemannPoint;
using numeric::ScalarTraits;
using special::Tolerance;

const double kPi = 3.14159265358979323846;

template <class T>
Complex<T> tc(std::complex<double> z) {
    return numeric::to_complex_t<T>(z);
}

// rhs = c1 * S1 + c2 * S2, with S1, S2 the truncated coefficient sums.
struct Parts {
    LogComplex<DD> lhs;
    LogComplex<DD> c1;
    LogComplex<DD> c2;
};

template <class T>
struct Common {
    Complex<T> b, a, log_u, log_z, z2;
    RiemannPoint<T> uz;
};

template <class T>
Common<T> common(const ExpansionConfig& cfg) {
    using std::log;
    const Complex<T> b = tc<T>(cfg.b);
    const Complex<T> log_u(log(T(cfg.t)), T(cfg.u_theta));
    const Complex<T> u = numeric::cexp(log_u);
    const RiemannPoint<T> z = cfg.z.cast<T>();
    const Complex<T> zc = z.to_complex();
    return {b,
            u * u / T(4) + b / T(2),
            log_u,
            z.log(),
            zc * zc,
            RiemannPoint<T>(z.r() * T(cfg.t), z.theta() + T(cfg.u_theta))};
}

template <class T>
Parts m_parts(const ExpansionConfig& cfg) {
    const Tolerance tol = Tolerance::from(cfg.prec);
    const Common<T> c = common<T>(cfg);
    const T ln2 = ScalarTraits<T>::ln2();
    const Complex<T> one(T(1));
    // 2^{1-b} u^{b-1} / Gamma(b) e^{-z^2/2} z^b M(a, b, z^2)
    const Complex<T> pref = (one - c.b) * ln2 + (c.b - one) * c.log_u - special::log_gamma<T>(c.b) -
                            c.z2 / T(2) + c.b * c.log_z;
    const LogComplex<T> lhs = LogComplex<T>::exp(pref) * special::kummer_m<T>(c.a, c.b, c.z2, tol);
    const LogComplex<T> c1 = LogComplex<T>::exp(c.log_z) * special::bessel_i<T>(c.b - one, c.uz, tol);
    const LogComplex<T> c2 = LogComplex<T>::exp(c.log_z - c.log_u) * special::bessel_i<T>(c.b, c.uz, tol);
    return {lhs.template cast<DD>(), c1.template cast<DD>(), c2.template cast<DD>()};
}

template <class T>
Parts u_parts(const ExpansionConfig& cfg) {
    const Tolerance tol = Tolerance::from(cfg.prec);
    const Common<T> c = common<T>(cfg);
    const T ln2 = ScalarTraits<T>::ln2();
    const Complex<T> one(T(1));
    Complex<T> pref;
    if (cfg.variant == Variant::UCapital) {
        // Gamma(1+a-b) 2^{-b} u^{b-1}
        pref = special::log_gamma<T>(c.a - c.b + one) - c.b * ln2 + (c.b - one) * c.log_u;
    } else {
        // Gamma(a) 2^{b-2} u^{1-b}
        pref = special::log_gamma<T>(c.a) + (c.b - T(2)) * ln2 + (one - c.b) * c.log_u;
    }
    pref += -c.z2 / T(2) + c.b * c.log_z;
    const RiemannPoint<T> x = cfg.z.cast<T>().squared();
    const LogComplex<T> lhs = LogComplex<T>::exp(pref) * special::kummer_u<T>(c.a, c.b, x, tol);
    const LogComplex<T> c1 = LogComplex<T>::exp(c.log_z) * special::bessel_k<T>(c.b - one, c.uz, tol);
    const LogComplex<T> c2 = -(LogComplex<T>::exp(c.log_z - c.log_u) * special::bessel_k<T>(c.b, c.uz, tol));
    return {lhs.template cast<DD>(), c1.template cast<DD>(), c2.template cast<DD>()};
}

Parts parts(const ExpansionConfig& cfg) {
    cfg.validate();
    const bool dd = cfg.prec.mode == PrecisionMode::DoubleDouble;
    if (cfg.variant == Variant::M) return dd ? m_parts<DD>(cfg) : m_parts<double>(cfg);
    return dd ? u_parts<DD>(cfg) : u_parts<double>(cfg);
}

// sum_{s<N} P_s(mu, z) u^{-2s} with mu = b - 1
Complex<DD> coefficient_sum(const std::vector<ratpoly::CoeffPoly>& polys, const ExpansionConfig& cfg) {
    const Complex<DD> mu = tc<DD>(cfg.b) - Complex<DD>(DD(1));
    const Complex<DD> z = cfg.z.cast<DD>().to_complex();
    using std::log;
    const Complex<DD> inv_u2 = numeric::cexp(Complex<DD>(log(DD(cfg.t)), DD(cfg.u_theta)) * DD(-2));
    Complex<DD> acc;
    Complex<DD> w(DD(1));
    for (int s = 0; s < cfg.N; ++s) {
        acc += polys[static_cast<std::size_t>(s)].evaluate<DD>(mu, z) * w;
        w *= inv_u2;
    }
    return acc;
}

SideBySide assemble(const ExpansionConfig& cfg, const Parts& p, const Coefficients& coeffs) {
    if (coeffs.size() < cfg.N) {
        throw PreconditionError("coefficient table has " + std::to_string(coeffs.size()) + " terms, N = " +
                                std::to_string(cfg.N));
    }
    const bool lower = cfg.variant == Variant::ULower;
    const auto& first = lower ? coeffs.lowered.a : coeffs.table.A;
    const auto& second = lower ? coeffs.lowered.b : coeffs.table.B;
    const LogComplex<DD> rhs = p.c1 * LogComplex<DD>::from_complex(coefficient_sum(first, cfg)) +
                               p.c2 * LogComplex<DD>::from_complex(coefficient_sum(second, cfg));
    SideBySide out;
    out.lhs = p.lhs.cast<double>();
    out.rhs = rhs.cast<double>();
    out.rel_discrepancy = static_cast<double>(numeric::relative_discrepancy(p.lhs, rhs));
    if (std::isnan(out.rel_discrepancy)) throw InternalError("discrepancy evaluated to NaN");
    return out;
}

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::M: return "m";
        case Variant::UCapital: return "u-capital";
        case Variant::ULower: return "u-lower";
    }
    return "m";
}

Variant parse_variant(std::string_view s) {
    if (s == "m") return Variant::M;
    if (s == "u-capital") return Variant::UCapital;
    if (s == "u-lower") return Variant::ULower;
    throw ParseError("unknown variant '" + std::string(s) + "' (expected m, u-capital or u-lower)");
}

void ExpansionConfig::validate() const {
    prec.validate();
    if (N < 1) throw PreconditionError("N must be >= 1");
    if (!(t > 0)) throw PreconditionError("|u| must be positive");
    if (variant == Variant::M) {
        if (b.imag() == 0 && b.real() <= 0 && std::floor(b.real()) == b.real()) {
            throw PreconditionError("M expansion needs b not 0 or a negative integer");
        }
        return;
    }
    if (!(std::abs(u_theta) < kPi / 2)) throw PreconditionError("U expansions need |arg u| < pi/2");
    if (!(a().real() > 0)) throw PreconditionError("U expansions need Re a > 0");
}

Coefficients Coefficients::compute(int n) {
    if (n < 1) throw PreconditionError("need at least one coefficient");
    Coefficients c;
    c.table = olver::compute_coefficient_table(olver::confluent_f(), n - 1);
    c.lowered = olver::lower_coefficients(c.table);
    return c;
}

SideBySide eval_m_sides(const ExpansionConfig& cfg, const Coefficients& coeffs) {
    if (cfg.variant != Variant::M) throw PreconditionError("eval_m_sides needs variant m");
    return assemble(cfg, parts(cfg), coeffs);
}
SideBySide eval_m_sides(const ExpansionConfig& cfg) { return eval_m_sides(cfg, Coefficients::compute(cfg.N)); }

SideBySide eval_u_sides(const ExpansionConfig& cfg, const Coefficients& coeffs) {
    if (cfg.variant == Variant::M) throw PreconditionError("eval_u_sides needs variant u-capital or u-lower");
    return assemble(cfg, parts(cfg), coeffs);
}
SideBySide eval_u_sides(const ExpansionConfig& cfg) { return eval_u_sides(cfg, Coefficients::compute(cfg.N)); }

SideBySide eval_sides(const ExpansionConfig& cfg, const Coefficients& coeffs) {
    return assemble(cfg, parts(cfg), coeffs);
}
SideBySide eval_sides(const ExpansionConfig& cfg) { return eval_sides(cfg, Coefficients::compute(cfg.N)); }

SideBySide gamma_ratio_check(std::complex<double> b_in, double u_in, int N, const Precision& prec) {
    prec.validate();
    if (N < 0) throw PreconditionError("N must be >= 0");
    if (!(u_in > 0)) throw PreconditionError("u must be positive");
    const Complex<DD> b = tc<DD>(b_in);
    const DD u(u_in);
    const Complex<DD> q(u * u / DD(4));  // a = q + b/2
    const Complex<DD> half_b = b / DD(2);
    using std::log;
    // log of 2^{2-2b} u^{2b-2} = (b-1) log(u^2/4)
    LogComplex<DD> lhs = LogComplex<DD>::exp((b - DD(1)) * Complex<DD>(log(q.real()), DD(0)));
    long k = 0;
    const bool small_integer = b.imag() == DD(0) && std::floor(b_in.real()) == b_in.real() &&
                               std::abs(b_in.real()) <= 64;
    if (small_integer) {
        // Gamma(1+a-b)/Gamma(a) as a finite product, exact in a - j = q + (b/2 - j)
        k = static_cast<long>(b_in.real());
        Complex<DD> prod(DD(1));
        if (k >= 1) {
            for (long j = 1; j < k; ++j) prod *= q + (half_b - DD(static_cast<double>(j)));
            lhs = lhs / LogComplex<DD>::from_complex(prod);
        } else {
            for (long j = 0; j < 1 - k; ++j) prod *= q + (half_b + DD(static_cast<double>(j)));
            lhs = lhs * LogComplex<DD>::from_complex(prod);
        }
    } else {
        const Complex<DD> a = q + half_b;
        if (prec.mode == PrecisionMode::Double) {
            const std::complex<double> ad = numeric::to_complex_double(a);
            const std::complex<double> lg =
                special::log_gamma<double>(ad - b_in + 1.0) - special::log_gamma<double>(ad);
            lhs = lhs * LogComplex<DD>::exp(tc<DD>(lg));
        } else {
            lhs = lhs * LogComplex<DD>::exp(special::log_gamma<DD>(a - b + DD(1)) - special::log_gamma<DD>(a));
        }
    }
    const auto g = temme::gamma_ratio_coefficients(N);
    Complex<DD> acc;
    DD w(1);
    const DD inv_u2 = DD(1) / (u * u);
    for (int n = 0; n <= N; ++n) {
        acc += g.d[static_cast<std::size_t>(n)].evaluate<DD>(b) * w;
        w *= inv_u2;
    }
    const LogComplex<DD> rhs = LogComplex<DD>::from_complex(acc);
    SideBySide out;
    out.lhs = lhs.cast<double>();
    out.rhs = rhs.cast<double>();
    out.rel_discrepancy = static_cast<double>(numeric::relative_discrepancy(lhs, rhs));
    return out;
}

double m_winding_residual(const ExpansionConfig& cfg, const Coefficients& coeffs) {
    ExpansionConfig turned = cfg;
    turned.z = Point(cfg.z.r(), cfg.z.theta() + kPi);
    const SideBySide s0 = eval_m_sides(cfg, coeffs);
    const SideBySide s1 = eval_m_sides(turned, coeffs);
    // W3(e^{i pi} z) = e^{i pi (mu + 1)} W3(z), mu + 1 = b
    const Value factor = Value::exp(std::complex<double>(0, kPi) * cfg.b);
    return std::max(numeric::relative_discrepancy(s1.lhs, factor * s0.lhs),
                    numeric::relative_discrepancy(s1.rhs, factor * s0.rhs));
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw PreconditionError("slope fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0) throw PreconditionError("slope fit needs distinct abscissae");
    return sxy / sxx;
}

SweepResult decay_sweep(const std::vector<ExpansionConfig>& grid, unsigned threads) {
    if (grid.empty()) throw PreconditionError("sweep grid is empty");
    int n_max = 1;
    for (const auto& cfg : grid) n_max = std::max(n_max, cfg.N);
    const Coefficients coeffs = Coefficients::compute(n_max);

    // the oracle side and the Bessel factors do not depend on N
    using Key = std::tuple<int, double, double, double, double, double, double, int>;
    auto key_of = [](const ExpansionConfig& c) {
        return Key{static_cast<int>(c.variant), c.b.real(), c.b.imag(), c.t, c.u_theta, c.z.r(), c.z.theta(),
                   static_cast<int>(c.prec.mode)};
    };
    std::map<Key, std::size_t> index;
    std::vector<std::size_t> first_row;
    std::vector<std::size_t> slot(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto [it, fresh] = index.emplace(key_of(grid[i]), first_row.size());
        if (fresh) first_row.push_back(i);
        slot[i] = it->second;
    }

    struct Outcome {
        std::optional<Parts> parts;
        std::string status = "ok";
        std::string message;
    };
    std::vector<Outcome> outcomes(first_row.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < first_row.size(); j = next++) {
            try {
                outcomes[j].parts = parts(grid[first_row[j]]);
            } catch (const Error& e) {
                outcomes[j].status = e.kind();
                outcomes[j].message = e.what();
            }
        }
    };
    unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(first_row.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SweepRow row{grid[i], std::nullopt, "ok", {}};
        const Outcome& o = outcomes[slot[i]];
        if (!o.parts) {
            row.status = o.status;
            row.message = o.message;
        } else {
            try {
                row.sides = assemble(grid[i], *o.parts, coeffs);
            } catch (const Error& e) {
                row.status = e.kind();
                row.message = e.what();
            }
        }
        result.rows.push_back(std::move(row));
    }

    // group rows by everything except t, in order of first appearance
    using Group = std::tuple<int, double, double, double, double, double, int, int>;
    std::map<Group, std::size_t> groups;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& c = grid[i];
        const Group g{static_cast<int>(c.variant), c.b.real(), c.b.imag(), c.z.r(), c.z.theta(), c.u_theta, c.N,
                      static_cast<int>(c.prec.mode)};
        auto [it, fresh] = groups.emplace(g, members.size());
        if (fresh) members.emplace_back();
        members[it->second].push_back(i);
    }
    for (const auto& rows : members) {
        std::vector<double> x, y;
        for (std::size_t i : rows) {
            const auto& r = result.rows[i];
            if (!r.sides) continue;
            const double d = r.sides->rel_discrepancy;
            if (!(d > 0) || !std::isfinite(d)) continue;
            x.push_back(std::log(r.cfg.t));
            y.push_back(std::log(d));
        }
        std::vector<double> distinct = x;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2) continue;
        const auto& c = grid[rows.front()];
        result.fits.push_back(
            {c.variant, c.b, c.z, c.u_theta, c.N, static_cast<int>(x.size()), fit_slope(x, y)});
    }
    return result;
}

std::vector<ExpansionConfig> acceptance_grid(Variant v, const Precision& prec) {
    std::vector<ExpansionConfig> grid;
    for (double b : {0.7, 1.5, 2.5}) {
        for (double r : {0.5, 1.0, 2.0}) {
            for (double theta : {0.0, kPi, 2 * kPi, 2.5 * kPi}) {
                for (double ut : {0.0, 0.3}) {
                    for (int N : {1, 2, 3}) {
                        for (double t : {10.0, 20.0, 40.0}) {
                            ExpansionConfig c;
                            c.variant = v;
                            c.b = b;
                            c.t = t;
                            c.u_theta = ut;
                            c.z = Point(r, theta);
                            c.N = N;
                            c.prec = prec;
                            grid.push_back(c);
                        }
                    }
                }
            }
        }
    }
    return grid;
}

}  // namespace kasym::expansion
