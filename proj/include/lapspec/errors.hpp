#pragma once

#include <stdexcept>
#include <string>

namespace lapspec {

// Base class for every error thrown by the library, so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file or literal could not be parsed (carries a line number in the message).
struct ParseError : Error {
    using Error::Error;
};

// A graph violated its invariants (self-loop, duplicate edge, nonpositive weight, bad index).
struct InvalidGraphError : Error {
    using Error::Error;
};

struct NotConnectedError : Error {
    using Error::Error;
};

struct NotATreeError : Error {
    using Error::Error;
};

struct PathNotInTreeError : Error {
    using Error::Error;
};

struct InvalidPermutationError : Error {
    using Error::Error;
};

// A perturbation tuple named a pair outside the reference support.
struct SupportViolationError : Error {
    using Error::Error;
};

// An eigensolve finished with residuals above the contract.
struct ConvergenceFailureError : Error {
    using Error::Error;
};

// lambda_2 is not simple at the requested tolerance.
struct DegenerateLambda2Error : Error {
    using Error::Error;
};

// A requested eigenvalue is not simple, so the derivative formula does not apply.
struct DegenerateEigenvalueError : Error {
    using Error::Error;
};

// The Fiedler vector has an entry below tolerance.
struct DegenerateFiedlerError : Error {
    using Error::Error;
};

struct NoDivergingTreeError : Error {
    using Error::Error;
};

// The verified construction ran out of retries on some attachment step.
struct ScheduleExhaustedError : Error {
    using Error::Error;
};

// A perturbation search ran out of halvings/rounds within the norm budget.
struct BudgetExhaustedError : Error {
    using Error::Error;
};

struct ZeroPolynomialError : Error {
    using Error::Error;
};

// Division of a polynomial by X requested but the constant term is nonzero.
struct XNotARootError : Error {
    using Error::Error;
};

struct GenerationFailedError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

}  // namespace lapspec
