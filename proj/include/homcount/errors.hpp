#pragma once

#include <stdexcept>
#include <string>

#include "homcount/numeric.hpp"

namespace homcount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad group parameters (non-prime p, out-of-range degree, ...).
struct InvalidSpec : Error {
    using Error::Error;
};

// A Cayley table that violates the group axioms.
struct CayleyValidationFailed : Error {
    using Error::Error;
};

// Word / presentation / automorphism grammar errors.
struct ParseError : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

// Enumeration cost exceeds the configured budget. Carries the computed
// cost so a caller can raise the budget deliberately.
struct BudgetExceeded : Error {
    Int cost;
    BudgetExceeded(const std::string& what, Int computed_cost)
        : Error(what), cost(std::move(computed_cost)) {}
};

// An exact computation that must produce an integer did not; signals
// corrupted input data (a bad character table or hom counts).
struct NonIntegerResult : Error {
    using Error::Error;
};

struct BadConstantTerm : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// sigma composed with some homomorphism fails to kill a relator, i.e.
// sigma is not an automorphism at this finite image.
struct SigmaInconsistent : Error {
    using Error::Error;
};

}  // namespace homcount
