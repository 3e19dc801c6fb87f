#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kasym/numeric/log_complex.hpp"
#include "kasym/numeric/precision.hpp"
#include "kasym/numeric/riemann_point.hpp"
#include "kasym/olver/coefficients.hpp"

namespace kasym::expansion {

using numeric::Precision;
using Value = numeric::LogComplex<double>;
using Point = numeric::RiemannPoint<double>;

/// M: Bessel-I expansion of the M-side; UCapital: Bessel-K expansion with
/// A_s, B_s; ULower: Bessel-K expansion with the lowered a_s, b_s.
enum class Variant { M, UCapital, ULower };

std::string_view to_string(Variant v);  // "m", "u-capital", "u-lower"
Variant parse_variant(std::string_view s);

struct ExpansionConfig {
    Variant variant = Variant::M;
    std::complex<double> b{1.5, 0.0};
    double t = 20.0;        // |u|
    double u_theta = 0.0;   // arg u
    Point z{1.0, 0.0};
    int N = 3;
    Precision prec;

    std::complex<double> u() const { return std::polar(t, u_theta); }
    /// a = u^2/4 + b/2
    std::complex<double> a() const { return u() * u() / 4.0 + b / 2.0; }
    /// Throws PreconditionError when the configuration is outside the
    /// variant's hypotheses.
    void validate() const;
};

struct SideBySide {
    Value lhs;
    Value rhs;
    double rel_discrepancy = 0.0;  // |lhs/rhs - 1|
};

/// Exact coefficient polynomials, in mu, consumed by the right-hand sides.
struct Coefficients {
    olver::CoefficientTable table;
    olver::LoweredCoefficients lowered;

    /// Tables A_0..A_{n-1}, B_0..B_{n-1} and their lowered forms.
    static Coefficients compute(int n);
    int size() const { return static_cast<int>(table.A.size()); }
};

SideBySide eval_m_sides(const ExpansionConfig& cfg, const Coefficients& coeffs);
SideBySide eval_m_sides(const ExpansionConfig& cfg);
SideBySide eval_u_sides(const ExpansionConfig& cfg, const Coefficients& coeffs);
SideBySide eval_u_sides(const ExpansionConfig& cfg);
/// Dispatches on cfg.variant.
SideBySide eval_sides(const ExpansionConfig& cfg, const Coefficients& coeffs);
SideBySide eval_sides(const ExpansionConfig& cfg);

/// Gamma(1+a-b)/Gamma(a) 2^{2-2b} u^{2b-2} against sum_{n<=N} d_n u^{-2n}.
SideBySide gamma_ratio_check(std::complex<double> b, double u, int N, const Precision& prec = {});

/// Both sides of the M expansion at z e^{i pi} against e^{i pi b} times
/// the sides at z; returns the larger of the two relative residuals.
double m_winding_residual(const ExpansionConfig& cfg, const Coefficients& coeffs);

struct SweepRow {
    ExpansionConfig cfg;
    std::optional<SideBySide> sides;
    std::string status;   // "ok" or the error kind
    std::string message;  // error text for failed rows
};

/// Least-squares slope of ln(discrepancy) against ln t for one
/// (variant, b, z, arg u, N) group.
struct SlopeFit {
    Variant variant;
    std::complex<double> b;
    Point z;
    double u_theta;
    int N;
    int points;
    double slope;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SlopeFit> fits;
};

/// Evaluates every point (concurrently when `threads` != 1; 0 picks the
/// hardware concurrency). Rows keep the grid order; failures are recorded
/// per row. A fit is emitted for each group with at least two usable rows.
SweepResult decay_sweep(const std::vector<ExpansionConfig>& grid, unsigned threads = 0);

/// b in {0.7, 1.5, 2.5}, |z| in {0.5, 1, 2}, arg z in {0, pi, 2pi, 5pi/2},
/// arg u in {0, 0.3}, N in {1, 2, 3}, t in {10, 20, 40} (t innermost).
std::vector<ExpansionConfig> acceptance_grid(Variant v, const Precision& prec);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace kasym::expansion
