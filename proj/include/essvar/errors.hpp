#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace essvar {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values live over different variable contexts (or have mismatched sizes).
struct ContextMismatch : Error {
    using Error::Error;
};

// A rational was built or divided with a zero denominator.
struct ZeroDenominator : Error {
    using Error::Error;
};

// Input rows to complete_to_basis were linearly dependent.
struct DependentInput : Error {
    using Error::Error;
};

// invert() was asked for the inverse of a non-invertible matrix.
struct Singular : Error {
    using Error::Error;
};

// An operation defined only for forms received an inhomogeneous polynomial.
struct NotHomogeneous : Error {
    using Error::Error;
};

// Constants (degree 0, including the zero polynomial) have no catalecticant.
struct ZeroDegree : Error {
    using Error::Error;
};

// Apolar pairing of pieces of different degrees.
struct DegreeMismatch : Error {
    using Error::Error;
};

// derivative_span order outside 0..deg f.
struct BadOrder : Error {
    using Error::Error;
};

// homogenize() with a variable already in the context.
struct VariableClash : Error {
    using Error::Error;
};

// dehomogenize()/partial() with a variable not in the context.
struct UnknownVariable : Error {
    using Error::Error;
};

// Malformed expression text. position is the 1-based offset of the offence.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A variable token not present in the declared variable list.
struct UndeclaredVariable : SyntaxError {
    using SyntaxError::SyntaxError;
};

// new_presentation basis override that is dependent or spans the wrong space.
struct BadOverride : Error {
    using Error::Error;
};

// detect_cylinder on the zero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// A postcondition the theory guarantees failed at runtime; indicates a bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

}  // namespace essvar
