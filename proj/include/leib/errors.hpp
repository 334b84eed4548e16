#ifndef LEIB_ERRORS_HPP
#define LEIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leib {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar/field misuse: mixed fields, division by zero, composite modulus.
struct FieldError : Error {
    using Error::Error;
};

/// Dimension or shape mismatch in linear algebra or algebra operations.
struct ShapeError : Error {
    using Error::Error;
};

/// Malformed textual input (algebra files, scalar literals, ideal specs).
struct ParseError : Error {
    using Error::Error;
};

/// An operation's mathematical precondition does not hold for the input.
struct PreconditionError : Error {
    using Error::Error;
};

/// An enumeration would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace leib

#endif
