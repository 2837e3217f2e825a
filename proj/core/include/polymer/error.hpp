#pragma once

#include <stdexcept>
#include <string>

namespace polymer {

// Bad parameters, grids or budgets. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Non-finite input or a kernel entry that evaluated to inf/nan.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// LU breakdown or an otherwise non-invertible discretized operator.
class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refinement did not reach the requested tolerance. Maps to exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace polymer
