#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kasym {

/// Base class of every error raised by the library. `kind()` is a short,
/// stable, machine-parsable tag used by the CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define KASYM_DEFINE_ERROR(Name, tag)                                            \
    class Name : public Error {                                                  \
    public:                                                                      \
        explicit Name(const std::string& message) : Error(tag, message) {}       \
    };

// exact layer
KASYM_DEFINE_ERROR(DivisibilityError, "divisibility")
KASYM_DEFINE_ERROR(ParityError, "parity")
KASYM_DEFINE_ERROR(MixedParameterError, "mixed-parameter")
KASYM_DEFINE_ERROR(SeriesDomainError, "series-domain")
KASYM_DEFINE_ERROR(InvalidSeedError, "invalid-seed")
KASYM_DEFINE_ERROR(OrderStarvationError, "order-starvation")
KASYM_DEFINE_ERROR(ParseError, "parse")

// numeric layer
KASYM_DEFINE_ERROR(PoleError, "pole")
KASYM_DEFINE_ERROR(PrecisionExhaustedError, "precision-exhausted")
KASYM_DEFINE_ERROR(QuadratureError, "quadrature")
KASYM_DEFINE_ERROR(PreconditionError, "precondition")
KASYM_DEFINE_ERROR(InternalError, "internal")

#undef KASYM_DEFINE_ERROR

}  // namespace kasym
