#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylstab {

enum class ErrorCode {
    InvalidArgument,
    DivisionByZero,
    NegativeValuation,
    NotIntegral,
    AlgebraMismatch,
    ZeroElement,
    ResourceExceeded,
    UnsupportedRadical,
    DegenerateLattice,
    DimensionMismatch,
    NotHolonomicAtSomeLevel,
    AllLevelsDegenerate,
    ParseError,
    UnknownVariable,
};

std::string_view to_string(ErrorCode code);

/// Base of every error the library raises. The code is stable and is what the
/// command-line front end maps onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, std::size_t line, std::size_t column)
        : Error(code, message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

/// Caps applied by every Gröbner computation.
struct Limits {
    std::size_t max_gb_steps = 20000;
    std::size_t max_degree = 64;
    std::size_t max_terms = 200000;
};

} // namespace weylstab
