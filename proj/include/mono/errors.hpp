#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

// Invalid input data: bad Cartan type, mixed bases, malformed theory, ...
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// A computation refused because it would exceed a hard resource guard
// (e.g. Weyl group enumeration past 10^7 elements).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// The monopole sum diverges; carries the witness coweight direction.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what_arg, std::vector<long long> witness)
        : std::runtime_error(what_arg), witness_(std::move(witness)) {}

    const std::vector<long long>& witness() const noexcept { return witness_; }

private:
    std::vector<long long> witness_;
};

// Positioned error from the theory-file parser. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

} // namespace mono
