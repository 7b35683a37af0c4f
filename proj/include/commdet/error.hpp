#pragma once

#include <stdexcept>
#include <string>

namespace commdet {

enum class ErrorKind {
    SyntaxError,
    IllegalStep,
    PositionOutOfRange,
    NonUnit,
    NonHermitian,
    FermiOnEigenvalue,
    NotDeterminantClass,
    PadInsufficient,
    GapTooSmall,
    RadiusTooLarge,
    DimensionMismatch,
    KitaevViolation,
    NonFinite,
    NoConvergence,
    BadArgument,
};

const char* error_kind_name(ErrorKind k);

// Single exception type; `kind` routes CLI exit codes and lets tests
// assert on the precise failure without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry a position (1-based line/column; line 0 for
// single-line inputs where only the column is meaningful).
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error(ErrorKind::SyntaxError, std::move(message)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace commdet
