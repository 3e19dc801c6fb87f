#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace kasym::numeric {

enum class PrecisionMode { Double, DoubleDouble };

std::string_view to_string(PrecisionMode m);
/// "double" or "dd"; throws ParseError otherwise.
PrecisionMode parse_precision_mode(std::string_view s);

struct Precision {
    PrecisionMode mode = PrecisionMode::DoubleDouble;
    double series_tol = 1e-31;
    double quad_tol = 1e-20;

    /// Default tolerances for a mode.
    static Precision for_mode(PrecisionMode mode);
    /// Largest estimated relative error a kernel may return before it
    /// raises PrecisionExhaustedError.
    double error_budget() const { return mode == PrecisionMode::DoubleDouble ? 1e-10 : 1e-6; }

    void validate() const;
};

/// Mode from KUMMER_ASYM_PRECISION if set, else `fallback`.
PrecisionMode mode_from_environment(PrecisionMode fallback);

}  // namespace kasym::numeric
