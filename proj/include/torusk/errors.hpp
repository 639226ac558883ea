#pragma once

#include <stdexcept>
#include <string>

namespace torusk {

// Shape, dimension or schema problems with the caller's input.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates a mathematical precondition
// (singular U, non-primitive basis, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Floating-point machinery failed (eigensolver did not converge, NaN, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace torusk
