#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated
/// (non-disjoint triple, index out of range, cyclic arc set, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation was asked to run beyond its size gate or budget.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. `line` is 1-based for file formats and
/// 0 when not applicable; `offset` is the 1-based character position of the
/// offending token in single-line inputs such as formulas (input length + 1
/// at end of input), 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t offset = 0)
        : Error(message), line_(line), offset_(offset) {}

    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

}  // namespace indep
