#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Base class for every error thrown by this library.
struct FareyError : std::runtime_error {
    explicit FareyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadDeterminant : FareyError {
    BadDeterminant() : FareyError("determinant is not +1") {}
};

struct NotHyperbolic : FareyError {
    NotHyperbolic() : FareyError("not hyperbolic: |trace| <= 2") {}
};

struct AncestorOfInfinity : FareyError {
    AncestorOfInfinity() : FareyError("infinity has no ancestor") {}
};

struct InfinityHasNoCF : FareyError {
    InfinityHasNoCF() : FareyError("infinity has no continued fraction") {}
};

struct EmptySequence : FareyError {
    EmptySequence() : FareyError("sequence must be nonempty") {}
};

struct NonpositiveEntry : FareyError {
    NonpositiveEntry() : FareyError("sequence entries must be positive") {}
};

struct OddBlockCount : FareyError {
    OddBlockCount() : FareyError("word must decompose into an even number of T/U blocks") {}
};

struct EmptyWord : FareyError {
    EmptyWord() : FareyError("word must be nonempty") {}
};

struct EqualEdges : FareyError {
    EqualEdges() : FareyError("edges coincide; ladder is undefined") {}
};

struct AdjacentEdges : FareyError {
    AdjacentEdges() : FareyError("edges bound a common triangle; ladder is empty") {}
};

struct OddLength : FareyError {
    OddLength() : FareyError("cyclic type list must have even length") {}
};

struct TraceBoundTooSmall : FareyError {
    TraceBoundTooSmall() : FareyError("trace bound must be at least 3") {}
};

struct EmptyRange : FareyError {
    EmptyRange() : FareyError("dilatation bound must exceed 3") {}
};

struct BudgetExceeded : FareyError {
    BudgetExceeded() : FareyError("enumeration budget exceeded") {}
};

// Violated internal invariant. Always a bug, never a caller mistake.
struct InternalError : FareyError {
    explicit InternalError(const std::string& msg) : FareyError("internal error: " + msg) {}
};

}  // namespace farey
