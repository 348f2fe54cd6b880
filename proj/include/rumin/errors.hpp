#pragma once

#include <stdexcept>
#include <string>

namespace rumin {

// Base class for every error this library raises on purpose.
struct RuminError : std::runtime_error {
    explicit RuminError(const std::string& what) : std::runtime_error(what) {}
};

// Structure constants fail the Jacobi identity.
struct JacobiViolation : RuminError {
    explicit JacobiViolation(const std::string& what) : RuminError(what) {}
};

// The lower central series does not reach zero.
struct NotNilpotent : RuminError {
    explicit NotNilpotent(const std::string& what) : RuminError(what) {}
};

// A claimed grading is not respected by some bracket.
struct GradingViolation : RuminError {
    int i, j, k;
    GradingViolation(int i_, int j_, int k_, const std::string& what)
        : RuminError(what), i(i_), j(j_), k(k_) {}
};

// The Hodge-type star is only provided for diagonal inner products.
struct NonDiagonalGram : RuminError {
    explicit NonDiagonalGram(const std::string& what) : RuminError(what) {}
};

// Two independent computations of the same object disagree. Always a bug.
struct InternalDisagreement : RuminError {
    explicit InternalDisagreement(const std::string& what) : RuminError(what) {}
};

// Weight bookkeeping was requested in a basis that does not split into
// the weight spaces.
struct NotPureBasis : RuminError {
    explicit NotPureBasis(const std::string& what) : RuminError(what) {}
};

// An operator advertised as nilpotent failed to vanish within its
// theoretical bound. Always a bug.
struct NilpotencyCapExceeded : RuminError {
    explicit NilpotencyCapExceeded(const std::string& what) : RuminError(what) {}
};

// Matrix or operator shapes do not line up.
struct DimensionMismatch : RuminError {
    explicit DimensionMismatch(const std::string& what) : RuminError(what) {}
};

// Input file could not be parsed. byte_offset is a best-effort position.
struct ParseError : RuminError {
    std::size_t byte_offset;
    ParseError(std::size_t offset, const std::string& what)
        : RuminError(what), byte_offset(offset) {}
};

// A 1-based index in an input file falls outside the algebra dimension.
struct IndexOutOfRange : RuminError {
    explicit IndexOutOfRange(const std::string& what) : RuminError(what) {}
};

// The same bracket pair appears twice (in either order).
struct DuplicateBracket : RuminError {
    explicit DuplicateBracket(const std::string& what) : RuminError(what) {}
};

// A rational literal does not match the accepted format.
struct BadRational : RuminError {
    explicit BadRational(const std::string& what) : RuminError(what) {}
};

} // namespace rumin
