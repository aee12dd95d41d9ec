#pragma once

#include <stdexcept>
#include <string>

namespace wmcs {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : Error {
    using Error::Error;
};
struct DuplicateLabelError : Error {
    using Error::Error;
};
struct SizeLimitError : Error {
    using Error::Error;
};
struct MissingJoinError : Error {
    using Error::Error;
};
struct NotLatticeError : Error {
    using Error::Error;
};
struct EmptyDomainError : Error {
    using Error::Error;
};
struct OverflowError : Error {
    using Error::Error;
};

// A stated precondition of a theorem-backed operation does not hold.
struct HypothesisError : Error {
    using Error::Error;
};
// An enumeration budget ran out before the check was complete.
struct BudgetExceeded : Error {
    using Error::Error;
};
// A theorem whose hypotheses were verified failed on a concrete instance.
struct TheoremViolation : Error {
    using Error::Error;
};

struct UnknownGalleryName : Error {
    using Error::Error;
};
struct NotInStartSetError : Error {
    using Error::Error;
};
struct DeadEndError : Error {
    using Error::Error;
};

struct DemandAxiomViolation : Error {
    using Error::Error;
};
struct RuleDomainError : Error {
    using Error::Error;
};
struct AllocationError : Error {
    using Error::Error;
};
struct InfeasibleCapacityError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

}  // namespace wmcs
