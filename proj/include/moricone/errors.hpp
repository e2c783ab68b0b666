#pragma once

#include "moricone/rational.hpp"

#include <stdexcept>
#include <string>

namespace moricone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors or matrices whose lengths do not agree with their context.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Input parameters outside the documented domain of an operation.
class InputError : public Error {
public:
    using Error::Error;
};

/// A dualization or elimination ran past its ray/row or wall-clock budget.
/// Distinct from a refutation: nothing is known about the answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A cone that was required to be pointed contains a line.
class LinealityError : public Error {
public:
    LinealityError(const std::string& what, ClassVector line)
        : Error(what), line_(std::move(line)) {}

    /// A nonzero direction d with both d and -d in the cone.
    const ClassVector& line() const noexcept { return line_; }

private:
    ClassVector line_;
};

/// Structural problems in a nefness certificate (bad shapes, non-commuting maps).
class CertificateShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace moricone
