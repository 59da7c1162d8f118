#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mealy {

/// Argument outside the domain of an operation (letter out of range,
/// mismatched alphabets, malformed normal form, ...).
class InputDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (state count, element count, level) was hit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two computation routes that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace mealy
