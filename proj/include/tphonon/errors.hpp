// errors.hpp — exception types shared across the library and CLI

#pragma once

#include <stdexcept>
#include <string>

namespace tphonon {

// Bad arguments, violated preconditions, malformed configs (CLI exit code 2).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A request outside the validated domain of a fit or model, e.g. kR outside
// the log-fit range. Still an argument problem from the caller's side.
class RangeError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Numerical failure: solver or quadrature did not reach its tolerance, or an
// internal cross-check disagreed (CLI exit code 3).
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved = 0.0)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int argument = 2;
inline constexpr int convergence = 3;
inline constexpr int io = 4;
} // namespace exit_code

} // namespace tphonon
