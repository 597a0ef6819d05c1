#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (DIMACS, machine files, JSON documents).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive search refused to run because the instance exceeds its guard.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated by its arguments.
class InvalidInput : public Error {
public:
    using Error::Error;
};

}  // namespace satkit
