#ifndef INSEP_ERRORS_HPP
#define INSEP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace insep {

// Base for all library errors so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error("division by zero: " + msg) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name) : Error("unknown variable: " + name) {}
};

struct NotASubfield : Error {
    explicit NotASubfield(const std::string& msg) : Error("not a subfield: " + msg) {}
};

struct NotATower : Error {
    explicit NotATower(const std::string& msg) : Error("not a tower: " + msg) {}
};

struct NotInField : Error {
    explicit NotInField(const std::string& msg) : Error("element not in field: " + msg) {}
};

struct GeneratorsInsufficient : Error {
    explicit GeneratorsInsufficient(const std::string& msg)
        : Error("generators insufficient: " + msg) {}
};

struct PresentationMismatch : Error {
    PresentationMismatch() : Error("derivations use different presentations") {}
};

struct UnsupportedPrime : Error {
    explicit UnsupportedPrime(unsigned p)
        : Error("unsupported prime for this operation: p = " + std::to_string(p)) {}
};

struct ExponentTooLarge : Error {
    explicit ExponentTooLarge(unsigned n)
        : Error("extension exponent " + std::to_string(n) + " exceeds 1") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("spec schema: " + msg) {}
};

struct UnknownCommand : Error {
    explicit UnknownCommand(const std::string& name) : Error("unknown command: " + name) {}
};

}  // namespace insep

#endif
