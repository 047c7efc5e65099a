#pragma once

#include <stdexcept>
#include <string>

namespace arcstab {

// Bad configuration or unusable arguments: wrong shapes, invalid options.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data: unreadable files, NaN samples,
// rows that fail validity checks.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure at runtime: non-convergence, singular matrices,
// degenerate likelihoods.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arcstab
