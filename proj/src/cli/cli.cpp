#include "kasym/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "kasym/errors.hpp"
#include "kasym/expansion/expansion.hpp"
#include "kasym/olver/coefficients.hpp"
#include "kasym/ratpoly/parse.hpp"
#include "kasym/ratpoly/serialize.hpp"
#include "kasym/special/special.hpp"
#include "kasym/temme/coefficients.hpp"
#include "kasym/temme/identities.hpp"

namespace kasym::cli {
namespace {

using expansion::ExpansionConfig;
using expansion::Variant;
using numeric::Precision;
using numeric::PrecisionMode;
using ratpoly::CoeffPoly;
using ratpoly::Json;
using ratpoly::Param;
using ratpoly::ParamPoly;
using cplx = std::complex<double>;

const double kPi = 3.14159265358979323846;

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

std::string format_complex(cplx z) {
    const std::string im = format_real(std::abs(z.imag()));
    return format_real(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

template <class T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + f(v[i]);
    return s;
}

// z-degree array of exact polynomial strings
Json poly_strings(const CoeffPoly& p) {
    Json j = Json::array();
    for (int k = 0; k <= p.degree(); ++k) j.push_back(p.coeff(k).to_string());
    return j;
}

Json poly_table(const std::vector<CoeffPoly>& v) {
    Json j = Json::array();
    for (const auto& p : v) j.push_back(poly_strings(p));
    return j;
}

Json param_table(const std::vector<ParamPoly>& v) {
    Json j = Json::array();
    for (const auto& p : v) j.push_back(p.to_string());
    return j;
}

void write_text_table(std::ostream& out, const std::string& name, const std::vector<CoeffPoly>& v) {
    for (std::size_t s = 0; s < v.size(); ++s) out << name << "_" << s << " = " << v[s].to_string() << "\n";
}

void write_value(std::ostream& out, const std::string& name, const expansion::Value& v) {
    out << name << "_logmag " << format_real(v.logmag()) << "\n";
    out << name << "_phase " << format_real(v.phase()) << "\n";
    if (v.representable()) {
        const cplx c = v.to_complex();
        out << name << "_value " << format_real(c.real()) << " " << format_real(c.imag()) << "\n";
    }
}

struct Header {
    std::vector<std::pair<std::string, std::string>> items;
    void add(const std::string& k, const std::string& v) { items.emplace_back(k, v); }
    void write_comments(std::ostream& out) const {
        for (const auto& [k, v] : items) out << "# " << k << "=" << v << "\n";
    }
    Json json() const {
        Json j = Json::object();
        for (const auto& [k, v] : items) j[k] = v;
        return j;
    }
};

Precision resolve_precision(const std::string& flag, PrecisionMode fallback) {
    if (!flag.empty()) return Precision::for_mode(numeric::parse_precision_mode(flag));
    return Precision::for_mode(numeric::mode_from_environment(fallback));
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw CLI::ValidationError("--format", "must be one of " + list + " for this command");
}

std::vector<double> parse_reals(const std::vector<std::string>& v) {
    std::vector<double> out;
    for (const auto& s : v) out.push_back(parse_real(s));
    return out;
}

// ---------------------------------------------------------------- coeffs

struct CoeffsOptions {
    std::string f = "z^2";
    int order = 10;
    std::string param = "mu";
    std::string variant = "AB";
    std::string format = "json";
};

void run_coeffs(const CoeffsOptions& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    const Param param = o.param == "b" ? Param::B : Param::Mu;
    const CoeffPoly f = ratpoly::parse_coeff_poly(o.f);
    const olver::CoefficientTable table = olver::compute_coefficient_table(f, o.order, param);
    Header h;
    h.add("command", "coeffs");
    h.add("f", f.to_string());
    h.add("order", std::to_string(o.order));
    h.add("param", std::string(ratpoly::param_name(param)));
    h.add("variant", o.variant);
    h.add("encoding", "each polynomial is an array over powers of z of exact polynomials in the parameter");
    std::vector<CoeffPoly> first = table.A, second = table.B;
    std::string n1 = "A", n2 = "B";
    if (o.variant == "ab") {
        const olver::LoweredCoefficients low = olver::lower_coefficients(table);
        first = low.a;
        second = low.b;
        n1 = "a";
        n2 = "b";
    }
    if (o.format == "json") {
        Json j;
        j["config"] = h.json();
        j[n1] = poly_table(first);
        j[n2] = poly_table(second);
        out << j.dump(1) << "\n";
    } else {
        h.write_comments(out);
        write_text_table(out, n1, first);
        write_text_table(out, n2, second);
    }
}

// ---------------------------------------------------------------- temme

struct TemmeOptions {
    int nmax = 8;
    int kmax = 2;
    std::string format = "json";
};

void run_temme(const TemmeOptions& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    const temme::TemmeTable t = temme::compute_temme_table(o.nmax, o.kmax);
    const temme::GammaRatioCoefficients g = temme::gamma_ratio_coefficients(o.nmax);
    Header h;
    h.add("command", "temme");
    h.add("nmax", std::to_string(o.nmax));
    h.add("kmax", std::to_string(o.kmax));
    h.add("param", "b");
    if (o.format == "json") {
        Json j;
        j["config"] = h.json();
        j["adagger"] = poly_table(t.adagger);
        j["bdagger"] = poly_table(t.bdagger);
        j["d"] = param_table(g.d);
        j["dtilde"] = param_table(g.dtilde);
        out << j.dump(1) << "\n";
    } else {
        h.write_comments(out);
        write_text_table(out, "adagger", t.adagger);
        write_text_table(out, "bdagger", t.bdagger);
        for (std::size_t n = 0; n < g.d.size(); ++n) out << "d_" << n << " = " << g.d[n].to_string() << "\n";
        for (std::size_t n = 0; n < g.dtilde.size(); ++n) {
            out << "dtilde_" << n << " = " << g.dtilde[n].to_string() << "\n";
        }
    }
}

// ---------------------------------------------------------------- bernoulli

struct BernoulliOptions {
    int n = 6;
    std::string ell = "1";
    std::string x = "0";
    std::string format = "json";
};

void run_bernoulli(const BernoulliOptions& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    const ParamPoly ell = ratpoly::parse_param_poly(o.ell);
    const ParamPoly x = ratpoly::parse_param_poly(o.x);
    const std::vector<ParamPoly> values = temme::generalized_bernoulli(o.n, ell, x);
    Header h;
    h.add("command", "bernoulli");
    h.add("n", std::to_string(o.n));
    h.add("ell", ell.to_string());
    h.add("x", x.to_string());
    if (o.format == "json") {
        Json j;
        j["config"] = h.json();
        j["B"] = param_table(values);
        out << j.dump(1) << "\n";
    } else {
        h.write_comments(out);
        for (std::size_t k = 0; k < values.size(); ++k) out << "B_" << k << " = " << values[k].to_string() << "\n";
    }
}

// ---------------------------------------------------------------- oracle

struct OracleOptions {
    std::string fn;
    std::string nu, a, b;
    std::string r = "1", theta = "0";
    std::string precision;
};

void run_oracle(const OracleOptions& o, std::ostream& out) {
    const bool bessel = o.fn == "i" || o.fn == "k";
    if (bessel && (o.nu.empty() || !o.a.empty() || !o.b.empty())) {
        throw CLI::ValidationError("--fn " + o.fn, "needs --nu and no --a/--b");
    }
    if (!bessel && (!o.nu.empty() || o.a.empty() || o.b.empty())) {
        throw CLI::ValidationError("--fn " + o.fn, "needs --a and --b and no --nu");
    }
    const Precision prec = resolve_precision(o.precision, PrecisionMode::Double);
    const numeric::RiemannPoint<double> x(parse_real(o.r), parse_real(o.theta));
    Header h;
    h.add("command", "oracle");
    h.add("fn", o.fn);
    expansion::Value v;
    if (bessel) {
        const cplx nu = parse_complex(o.nu);
        h.add("nu", format_complex(nu));
        v = o.fn == "i" ? special::bessel_i(nu, x, prec) : special::bessel_k(nu, x, prec);
    } else {
        const cplx a = parse_complex(o.a), b = parse_complex(o.b);
        h.add("a", format_complex(a));
        h.add("b", format_complex(b));
        v = o.fn == "m" ? special::kummer_m(a, b, x.to_complex(), prec) : special::kummer_u(a, b, x, prec);
    }
    h.add("r", format_real(x.r()));
    h.add("theta", format_real(x.theta()));
    h.add("precision", std::string(numeric::to_string(prec.mode)));
    h.write_comments(out);
    write_value(out, "result", v);
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
    std::string variant = "m";
    std::string b = "1.5";
    std::string t = "20";
    std::string u_theta = "0";
    std::string r = "1", theta = "0";
    int N = 3;
    std::string precision;
};

void run_eval(const EvalOptions& o, std::ostream& out) {
    const Precision prec = resolve_precision(o.precision, PrecisionMode::Double);
    Header h;
    h.add("command", "eval");
    h.add("variant", o.variant);
    expansion::SideBySide s;
    const cplx b = parse_complex(o.b);
    const double t = parse_real(o.t);
    if (o.variant == "gamma-ratio") {
        h.add("b", format_complex(b));
        h.add("u", format_real(t));
        h.add("N", std::to_string(o.N));
        h.add("precision", std::string(numeric::to_string(prec.mode)));
        s = expansion::gamma_ratio_check(b, t, o.N, prec);
    } else {
        ExpansionConfig c;
        c.variant = expansion::parse_variant(o.variant);
        c.b = b;
        c.t = t;
        c.u_theta = parse_real(o.u_theta);
        c.z = expansion::Point(parse_real(o.r), parse_real(o.theta));
        c.N = o.N;
        c.prec = prec;
        h.add("b", format_complex(c.b));
        h.add("t", format_real(c.t));
        h.add("u_theta", format_real(c.u_theta));
        h.add("z_r", format_real(c.z.r()));
        h.add("z_theta", format_real(c.z.theta()));
        h.add("N", std::to_string(c.N));
        h.add("precision", std::string(numeric::to_string(prec.mode)));
        s = expansion::eval_sides(c);
    }
    h.write_comments(out);
    write_value(out, "lhs", s.lhs);
    write_value(out, "rhs", s.rhs);
    out << "rel_discrepancy " << format_real(s.rel_discrepancy) << "\n";
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    int nmax = 8;
};

bool run_verify(const VerifyOptions& o, std::ostream& out) {
    Header h;
    h.add("command", "verify");
    h.add("nmax", std::to_string(o.nmax));
    h.write_comments(out);
    bool all = true;
    for (const auto& r : temme::run_identity_suite(o.nmax)) {
        out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.scope << ")";
        if (!r.passed) out << " " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    return all;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
    std::string variant = "m";
    std::string preset;
    std::vector<std::string> b, r, theta, t, u_theta;
    std::vector<int> N;
    std::string precision;
    unsigned threads = 0;
};

void run_sweep(const SweepOptions& o, std::ostream& out) {
    const Variant variant = expansion::parse_variant(o.variant);
    const bool preset = !o.preset.empty();
    if (preset && o.preset != "acceptance") {
        throw CLI::ValidationError("--preset", "only 'acceptance' is defined");
    }
    if (preset && (!o.b.empty() || !o.r.empty() || !o.theta.empty() || !o.t.empty() || !o.u_theta.empty() ||
                   !o.N.empty())) {
        throw CLI::ValidationError("--preset", "pins the grid; drop the explicit grid options");
    }
    const Precision prec =
        resolve_precision(o.precision, preset ? PrecisionMode::DoubleDouble : PrecisionMode::Double);

    std::vector<ExpansionConfig> grid;
    if (preset) {
        grid = expansion::acceptance_grid(variant, prec);
    } else {
        std::vector<cplx> bs;
        for (const auto& s : o.b.empty() ? std::vector<std::string>{"1.5"} : o.b) bs.push_back(parse_complex(s));
        const auto rs = o.r.empty() ? std::vector<double>{1.0} : parse_reals(o.r);
        const auto thetas = o.theta.empty() ? std::vector<double>{0.0} : parse_reals(o.theta);
        const auto uts = o.u_theta.empty() ? std::vector<double>{0.0} : parse_reals(o.u_theta);
        const auto ns = o.N.empty() ? std::vector<int>{1, 2, 3} : o.N;
        const auto ts = o.t.empty() ? std::vector<double>{10, 20, 40} : parse_reals(o.t);
        for (cplx b : bs) {
            for (double r : rs) {
                for (double th : thetas) {
                    for (double ut : uts) {
                        for (int n : ns) {
                            for (double t : ts) {
                                ExpansionConfig c;
                                c.variant = variant;
                                c.b = b;
                                c.z = expansion::Point(r, th);
                                c.u_theta = ut;
                                c.N = n;
                                c.t = t;
                                c.prec = prec;
                                grid.push_back(c);
                            }
                        }
                    }
                }
            }
        }
    }

    // resolved grid axes, in loop order
    std::vector<cplx> bs;
    std::vector<double> rs, thetas, uts, ts;
    std::vector<int> ns;
    auto note = [](auto& v, const auto& x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    for (const auto& c : grid) {
        note(bs, c.b);
        note(rs, c.z.r());
        note(thetas, c.z.theta());
        note(uts, c.u_theta);
        note(ns, c.N);
        note(ts, c.t);
    }
    const std::function<std::string(const double&)> fr = [](const double& x) { return format_real(x); };
    Header h;
    h.add("command", "sweep");
    h.add("variant", std::string(expansion::to_string(variant)));
    h.add("preset", preset ? o.preset : "none");
    h.add("b", join<cplx>(bs, [](const cplx& z) { return format_complex(z); }));
    h.add("z_r", join(rs, fr));
    h.add("z_theta", join(thetas, fr));
    h.add("u_theta", join(uts, fr));
    h.add("N", join<int>(ns, [](const int& n) { return std::to_string(n); }));
    h.add("t", join(ts, fr));
    h.add("precision", std::string(numeric::to_string(prec.mode)));
    h.add("points", std::to_string(grid.size()));

    const expansion::SweepResult result = expansion::decay_sweep(grid, o.threads);
    h.write_comments(out);
    out << "variant,b_re,b_im,z_r,z_theta,t,u_theta,N,lhs_logmag,lhs_phase,rhs_logmag,rhs_phase,rel_discrepancy,"
           "status\n";
    for (const auto& row : result.rows) {
        const auto& c = row.cfg;
        out << expansion::to_string(c.variant) << "," << format_real(c.b.real()) << "," << format_real(c.b.imag())
            << "," << format_real(c.z.r()) << "," << format_real(c.z.theta()) << "," << format_real(c.t) << ","
            << format_real(c.u_theta) << "," << c.N << ",";
        if (row.sides) {
            const auto& s = *row.sides;
            out << format_real(s.lhs.logmag()) << "," << format_real(s.lhs.phase()) << ","
                << format_real(s.rhs.logmag()) << "," << format_real(s.rhs.phase()) << ","
                << format_real(s.rel_discrepancy);
        } else {
            out << ",,,,";
        }
        out << "," << row.status << "\n";
    }
    for (const auto& f : result.fits) {
        out << "# fit variant=" << expansion::to_string(f.variant) << " b=" << format_complex(f.b)
            << " z_r=" << format_real(f.z.r()) << " z_theta=" << format_real(f.z.theta())
            << " u_theta=" << format_real(f.u_theta) << " N=" << f.N << " points=" << f.points
            << " slope=" << format_real(f.slope) << "\n";
    }
}

int fail(std::ostream& err, const std::string& kind, const std::string& message, int status) {
    std::string line = message;
    for (char& ch : line) {
        if (ch == '\n') ch = ' ';
    }
    err << "error kind=" << kind << ": " << line << "\n";
    return status;
}

}  // namespace

std::string format_real(double x) {
    if (x == 0) return "0";  // also folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_real(const std::string& text) {
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw ParseError("not a real number: '" + text + "'");
        return v;
    };
    const auto p = text.find("pi");
    if (p == std::string::npos) return number(text);
    std::string coef = text.substr(0, p);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double c = 1.0;
    if (coef == "-") {
        c = -1.0;
    } else if (!coef.empty() && coef != "+") {
        c = number(coef);
    }
    const std::string rest = text.substr(p + 2);
    double d = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') throw ParseError("not a real number: '" + text + "'");
        d = number(rest.substr(1));
    }
    return c * kPi / d;
}

cplx parse_complex(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex number");
    if (text.back() != 'i') return {parse_real(text), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is not an exponent sign or the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag = [&](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split == std::string::npos) return {0.0, imag(body)};
    return {parse_real(body.substr(0, split)), imag(body.substr(split))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coefficients and numerical checks for Bessel-type expansions of Kummer functions",
                 "kasym"};
    app.require_subcommand(1);
    std::string out_path;
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write output to this file"); };

    CoeffsOptions co;
    CLI::App* coeffs = app.add_subcommand("coeffs", "Exact coefficient polynomials A_s, B_s or a_s, b_s");
    coeffs->add_option("--f", co.f, "Even polynomial f(z)")->capture_default_str();
    coeffs->add_option("--order", co.order, "Highest index S")->capture_default_str()->check(CLI::Range(0, 60));
    coeffs->add_option("--param", co.param, "Parameter")->capture_default_str()->check(CLI::IsMember({"mu", "b"}));
    coeffs->add_option("--variant", co.variant, "AB or the lowered ab")
        ->capture_default_str()
        ->check(CLI::IsMember({"AB", "ab"}));
    coeffs->add_option("--format", co.format, "json or text")->capture_default_str();
    add_out(coeffs);

    TemmeOptions to;
    CLI::App* tem = app.add_subcommand("temme", "Iterated coefficients and gamma-ratio coefficients d_n, dtilde_n");
    tem->add_option("--nmax", to.nmax, "Highest n")->capture_default_str()->check(CLI::Range(0, 40));
    tem->add_option("--kmax", to.kmax, "Highest k kept per iteration")->capture_default_str()->check(CLI::Range(1, 40));
    tem->add_option("--format", to.format, "json or text")->capture_default_str();
    add_out(tem);

    BernoulliOptions bo;
    CLI::App* ber = app.add_subcommand("bernoulli", "Generalized Bernoulli polynomials B_n^(ell)(x)");
    ber->add_option("--n", bo.n, "Highest n")->capture_default_str()->check(CLI::Range(0, 60));
    ber->add_option("--ell", bo.ell, "Order ell, a polynomial in b")->capture_default_str();
    ber->add_option("--x", bo.x, "Argument x, a polynomial in b")->capture_default_str();
    ber->add_option("--format", bo.format, "json or text")->capture_default_str();
    add_out(ber);

    OracleOptions oo;
    CLI::App* ora = app.add_subcommand("oracle", "Evaluate I, K, M or U at a point of the Riemann surface");
    ora->add_option("--fn", oo.fn, "Function")->required()->check(CLI::IsMember({"i", "k", "m", "u"}));
    ora->add_option("--nu", oo.nu, "Bessel order (complex)");
    ora->add_option("--a", oo.a, "Kummer a (complex)");
    ora->add_option("--b", oo.b, "Kummer b (complex)");
    ora->add_option("--r", oo.r, "Modulus of the argument")->capture_default_str();
    ora->add_option("--theta", oo.theta, "Unreduced phase of the argument, e.g. 5pi/2")->capture_default_str();
    ora->add_option("--precision", oo.precision, "double or dd")->check(CLI::IsMember({"double", "dd"}));
    add_out(ora);

    EvalOptions eo;
    CLI::App* ev = app.add_subcommand("eval", "Both sides of one expansion, or of the gamma-ratio series");
    ev->add_option("--variant", eo.variant, "m, u-capital, u-lower or gamma-ratio")
        ->capture_default_str()
        ->check(CLI::IsMember({"m", "u-capital", "u-lower", "gamma-ratio"}));
    ev->add_option("--b", eo.b, "b (complex)")->capture_default_str();
    ev->add_option("--t", eo.t, "|u|")->capture_default_str();
    ev->add_option("--u-theta", eo.u_theta, "arg u")->capture_default_str();
    ev->add_option("--r", eo.r, "|z|")->capture_default_str();
    ev->add_option("--theta", eo.theta, "Unreduced arg z")->capture_default_str();
    ev->add_option("--N", eo.N, "Number of terms")->capture_default_str();
    ev->add_option("--precision", eo.precision, "double or dd")->check(CLI::IsMember({"double", "dd"}));
    add_out(ev);

    VerifyOptions vo;
    CLI::App* ver = app.add_subcommand("verify", "Run the exact identity suite");
    ver->add_option("--nmax", vo.nmax, "Depth")->capture_default_str()->check(CLI::Range(1, 20));
    add_out(ver);

    SweepOptions so;
    CLI::App* swp = app.add_subcommand("sweep", "Decay sweep over a grid, as CSV");
    swp->add_option("--variant", so.variant, "m, u-capital or u-lower")
        ->capture_default_str()
        ->check(CLI::IsMember({"m", "u-capital", "u-lower"}));
    swp->add_option("--preset", so.preset, "Pinned grid: acceptance");
    swp->add_option("--b", so.b, "Values of b")->delimiter(',');
    swp->add_option("--r", so.r, "Values of |z|")->delimiter(',');
    swp->add_option("--theta", so.theta, "Values of arg z")->delimiter(',');
    swp->add_option("--u-theta", so.u_theta, "Values of arg u")->delimiter(',');
    swp->add_option("--N", so.N, "Values of N")->delimiter(',');
    swp->add_option("--t", so.t, "Values of |u|")->delimiter(',');
    swp->add_option("--precision", so.precision, "double or dd")->check(CLI::IsMember({"double", "dd"}));
    swp->add_option("--threads", so.threads, "Worker threads, 0 for all cores")->capture_default_str();
    add_out(swp);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, "usage", e.what(), kUsageError);
    }

    std::ostringstream buffer;
    try {
        bool ok = true;
        if (*coeffs) run_coeffs(co, buffer);
        if (*tem) run_temme(to, buffer);
        if (*ber) run_bernoulli(bo, buffer);
        if (*ora) run_oracle(oo, buffer);
        if (*ev) run_eval(eo, buffer);
        if (*ver) ok = run_verify(vo, buffer);
        if (*swp) run_sweep(so, buffer);
        if (out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw IoError("cannot open '" + out_path + "' for writing");
            file << buffer.str();
            if (!file) throw IoError("write to '" + out_path + "' failed");
        }
        if (!ok) return fail(err, "identity", "at least one identity failed", kDomainError);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, "usage", e.what(), kUsageError);
    } catch (const ParseError& e) {
        return fail(err, e.kind(), e.what(), kUsageError);
    } catch (const Error& e) {
        return fail(err, e.kind(), e.what(), kDomainError);
    }
}

}  // namespace kasym::cli
