#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewrat {

enum class ErrorKind {
    DivisionByZero,
    MixedFields,
    ZeroConjugator,
    Unsupported,
    DivisionByZeroPoly,
    ZeroDenominator,
    ZeroInverse,
    UndefinedAtPoint,
    NotSemiInvariant,
    UnsupportedField,
    ReducibleDenominator,
    NotConjugate,
    DomainMismatch,
    NotInvertible,
    NotConvex,
    IncompleteCover,
    NotActionPreserving,
    NotGLinear,
    SyntaxError,
    UnknownLiteral,
    InvalidConfig,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::ZeroConjugator: return "ZeroConjugator";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::UndefinedAtPoint: return "UndefinedAtPoint";
        case ErrorKind::NotSemiInvariant: return "NotSemiInvariant";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::ReducibleDenominator: return "ReducibleDenominator";
        case ErrorKind::NotConjugate: return "NotConjugate";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::IncompleteCover: return "IncompleteCover";
        case ErrorKind::NotActionPreserving: return "NotActionPreserving";
        case ErrorKind::NotGLinear: return "NotGLinear";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownLiteral: return "UnknownLiteral";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Parse failures additionally record the byte offset into the source text.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::SyntaxError, "at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace skewrat
