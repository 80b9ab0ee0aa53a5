#pragma once

#include <stdexcept>
#include <string>

namespace conifold {

// Root of every library error. Each subclass maps to one failure kind.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct BranchCutError : DomainError { using DomainError::DomainError; };
struct PoleError : DomainError { using DomainError::DomainError; };
struct SingularityError : DomainError { using DomainError::DomainError; };
struct WallError : DomainError { using DomainError::DomainError; };
struct DegenerateError : DomainError { using DomainError::DomainError; };
struct OnRayError : DomainError { using DomainError::DomainError; };
struct OrderingError : DomainError { using DomainError::DomainError; };
struct RegimeError : DomainError { using DomainError::DomainError; };

struct BudgetError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct BranchTrackError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };

// Raised when an asymptotic series is evaluated outside its useful range.
struct DivergenceWarning : Error { using Error::Error; };

}  // namespace conifold
