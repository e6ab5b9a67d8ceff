#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the size limits of an exhaustive routine.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Raised when a graph holds a configuration that blocks discharging
/// (a 1-vertex, an all-2-vertex cycle, or an over-full thread multigraph).
class ReducibleConfigurationError : public Error {
public:
    using Error::Error;
};

/// Positioned diagnostic for the text formats. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace gsq
