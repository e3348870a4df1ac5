#pragma once

#include <stdexcept>
#include <string>

namespace infpot {

/// Input outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series hit its term cap before the truncation bound was met.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at (r,theta) = (1,0) or (1,pi/2), where the radial
/// derivatives of W have genuine jumps.
class CornerSingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A root bracket could not be established (sign conditions violated).
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iteration exhausted its budget without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hessian requested where it does not exist (on or next to the diagonal).
class SingularHessianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quantity has no value at the requested point (gradient at the centre,
/// gradient at the outer corners).
class UndefinedValueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace infpot
