#pragma once

#include <stdexcept>
#include <string>

namespace rihahn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter set violates one of the pole-exclusion conditions.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// No numerator parameter forces a hypergeometric series to terminate.
class NonTerminating : public Error {
public:
    using Error::Error;
};

/// A denominator Pochhammer vanishes inside the summation range.
class PoleInDenominator : public Error {
public:
    using Error::Error;
};

/// A difference operator addressed an off-grid point with a nonzero coefficient.
class BoundaryLeak : public Error {
public:
    using Error::Error;
};

/// Division by an exactly-zero quantity that the caller must handle (reported,
/// never silently skipped).
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

/// Failure to read or write a report artifact.
class IOError : public Error {
public:
    using Error::Error;
};

} // namespace rihahn
