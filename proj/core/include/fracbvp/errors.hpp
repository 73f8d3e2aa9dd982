#ifndef FRACBVP_ERRORS_HPP
#define FRACBVP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracbvp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// gamma() at zero or a negative integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// gamma() argument too large for double range.
class OverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Non-finite integrand or failed refinement check.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Runtime failure while evaluating an expression (division by zero, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

/// Expression syntax error; offset is the byte position in the input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Problem-config file error with file/line context.
class ConfigError : public Error {
public:
    ConfigError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
    explicit ConfigError(const std::string& what) : Error(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace fracbvp

#endif
