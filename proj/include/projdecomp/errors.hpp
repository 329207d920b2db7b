#ifndef PROJDECOMP_ERRORS_HPP
#define PROJDECOMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projdecomp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector length or matrix shape does not match the operand it is applied to.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the domain of the operation (negative base with a
/// fractional exponent, all-zero matrix, log of a non-positive value, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation is only defined for a particular shape (e.g. square).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A column or row with zero variance was handed to a z-transform.
class DegenerateLineError : public DomainError {
public:
    DegenerateLineError(const std::string& what, std::size_t index)
        : DomainError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The matrix has an all-zero row or column, so unit RMS is unattainable.
class InfeasibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed input file. `line()` is 1-based; 0 means no specific line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace projdecomp

#endif
