#pragma once

#include <stdexcept>
#include <string>

namespace edgewalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / lookup
struct CycleDetected : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct NonPositiveTime : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct InvalidSubset : Error { using Error::Error; };
struct InvalidBranch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// exact time arithmetic
struct IndexOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct OverflowDetected : Error { using Error::Error; };

// Raised when two distinct multiplicity vectors evaluate to nearly the
// same time: the basis is numerically commensurate and no downstream
// count can be trusted.
struct BasisCollision : Error { using Error::Error; };

// simulation
struct HorizonNegative : Error { using Error::Error; };

// lattice counting
struct NonPositiveCoefficient : Error { using Error::Error; };
struct EmptySystem : Error { using Error::Error; };
struct BoundaryAmbiguity : Error { using Error::Error; };

// fitting
struct InsufficientSamples : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

} // namespace edgewalk
