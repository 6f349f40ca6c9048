#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ostrowski {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A subexpression was evaluated outside its mathematical domain.
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::string subexpression)
        : Error(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

/// The value exists but the first derivative does not (abs at 0, sqrt at 0, ...).
class NondifferentiableError : public Error {
public:
    NondifferentiableError(const std::string& what, std::string subexpression)
        : Error(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

/// Caller-supplied arguments violate a stated hypothesis (interval order, g' sign, p range, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Adaptive integration did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double cell_lo, double cell_hi)
        : Error(what), cell_lo_(cell_lo), cell_hi_(cell_hi) {}

    double cell_lo() const noexcept { return cell_lo_; }
    double cell_hi() const noexcept { return cell_hi_; }

private:
    double cell_lo_;
    double cell_hi_;
};

}  // namespace ostrowski
