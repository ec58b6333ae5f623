#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endscope {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (`.tree`, `.graph`, serialized cones).
/// Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace endscope
