#ifndef BOMBIERI_ERROR_HPP
#define BOMBIERI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bombieri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors of different ambient dimension were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A coefficient sequence does not match the size of the vector family.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A Hölder exponent outside [1, inf], or NaN.
class ExponentError : public Error {
public:
    using Error::Error;
};

/// The exponent is a valid Hölder exponent but outside the range an
/// operation is defined for, e.g. the power-mean bound needs 1 < p <= 2.
class ExponentRangeError : public ExponentError {
public:
    using ExponentError::ExponentError;
};

/// Non-finite input, negative value where a magnitude is required, or a
/// parameter outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotOrthonormalError : public Error {
public:
    using Error::Error;
};

} // namespace bombieri

#endif
