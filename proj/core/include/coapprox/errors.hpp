#pragma once

#include <stdexcept>
#include <string>

namespace coapprox {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (numbers, problem files, candidates).
struct ParseError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

/// The supplied diagonal matrices are linearly dependent.
struct DependentBasis : Error {
    using Error::Error;
};

/// Operation is undefined on the all-zero component class.
struct ZeroClass : Error {
    using Error::Error;
};

struct ZeroDirection : Error {
    using Error::Error;
};

struct NotOrthogonal : Error {
    using Error::Error;
};

struct NotSimultaneouslyDiagonalized : Error {
    using Error::Error;
};

/// A mathematically guaranteed condition failed; always a bug.
struct InternalInvariantViolated : Error {
    using Error::Error;
};

/// The simplex pivot guard tripped; impossible under Bland's rule.
struct CycleGuardExceeded : Error {
    using Error::Error;
};

}  // namespace coapprox
