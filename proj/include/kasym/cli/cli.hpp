#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace kasym::cli {

/// Exit statuses of `run`.
enum ExitStatus : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Results go to `out`
/// (or to the file named by --out); diagnostics go to `err` as a single
/// line "error kind=<kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Real number, optionally a multiple of pi: "1.5", "-2e-3", "pi", "5pi/2", "0.5*pi".
double parse_real(const std::string& text);

/// Complex number: "1.5", "-0.5i", "1.2+0.5i".
std::complex<double> parse_complex(const std::string& text);

/// %.17g.
std::string format_real(double x);

}  // namespace kasym::cli
