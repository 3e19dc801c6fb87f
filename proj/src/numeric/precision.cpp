#include "kasym/numeric/precision.hpp"

#include <cstdlib>

#include "kasym/errors.hpp"

namespace kasym::numeric {

std::string_view to_string(PrecisionMode m) { return m == PrecisionMode::DoubleDouble ? "dd" : "double"; }

PrecisionMode parse_precision_mode(std::string_view s) {
    if (s == "dd") return PrecisionMode::DoubleDouble;
    if (s == "double") return PrecisionMode::Double;
    throw ParseError("precision mode must be 'double' or 'dd', got '" + std::string(s) + "'");
}

Precision Precision::for_mode(PrecisionMode mode) {
    if (mode == PrecisionMode::DoubleDouble) return {mode, 1e-31, 1e-20};
    return {mode, 1e-17, 1e-13};
}

void Precision::validate() const {
    if (!(series_tol > 0.0 && series_tol < 1.0) || !(quad_tol > 0.0 && quad_tol < 1.0)) {
        throw PreconditionError("precision tolerances must lie in (0, 1)");
    }
}

PrecisionMode mode_from_environment(PrecisionMode fallback) {
    const char* env = std::getenv("KUMMER_ASYM_PRECISION");
    if (env == nullptr || *env == '\0') return fallback;
    return parse_precision_mode(env);
}

}  // namespace kasym::numeric
