#pragma once

#include <cmath>
#include <stdexcept>

#include "infpot/errors.hpp"

namespace infpot {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = 1.57079632679489661923;
inline constexpr double kQuarterPi = 0.78539816339744830962;
inline constexpr double kSqrt2 = 1.41421356237309504880;

/// Gradient-space point on the closed fundamental quadrant:
/// r = |grad u| in [0,1], theta = arg grad u in [0, pi/2].
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

/// Physical point in the closed square [0,2] x [0,2].
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Truncation control for every m_n-indexed series (m_n = 4n-2).
struct SeriesPolicy {
    /// Stop a series once the next term's absolute bound falls below this.
    double abs_tol = 1e-15;
    /// Hard cap on series terms; reaching it raises TruncationError.
    long max_terms = 100000;
    /// Radii at or above this are evaluated with the r = 1 closed forms.
    double boundary_snap = 1.0 - 1e-12;

    /// Angular half-width around the corners (1,0) and (1,pi/2) inside which
    /// the r = 1 closed forms for the radial derivatives cannot be trusted.
    /// Scales with the width of the boundary heat layer.
    double corner_guard() const { return 12.0 * std::sqrt(1.0 - boundary_snap); }

    void validate() const {
        if (!(abs_tol > 0.0))
            throw DomainError("SeriesPolicy: abs_tol must be positive");
        if (max_terms < 1)
            throw DomainError("SeriesPolicy: max_terms must be >= 1");
        if (!(boundary_snap > 0.0 && boundary_snap < 1.0))
            throw DomainError("SeriesPolicy: boundary_snap must be in (0,1)");
    }
};

/// Tolerances for the one-dimensional root solves.
struct SolverPolicy {
    double root_tol = 1e-13;       ///< residual tolerance for both 1-D solves
    int max_iter = 200;            ///< per-solve iteration cap
    double bracket_shrink = 1e-15; ///< bracket width that counts as converged

    void validate() const {
        if (!(root_tol > 0.0) || max_iter < 1 || !(bracket_shrink > 0.0))
            throw DomainError("SolverPolicy: all fields must be positive");
    }
};

}  // namespace infpot
