#pragma once

#include "infpot/series.hpp"
#include "infpot/types.hpp"

namespace infpot {

/// Saddle point of f(r,theta) = r (x cos theta + y sin theta) - W(r,theta)
/// together with the critical value and solver diagnostics.
struct MinimaxResult {
    double r_star = 0.0;       ///< |grad u| at the point
    double theta_star = 0.0;   ///< arg grad u at the point
    double u = 0.0;            ///< potential value
    int inner_iters = 0;       ///< radial Newton iterations, summed
    int outer_iters = 0;       ///< angular Newton iterations
    double residual_r = 0.0;   ///< |W_r - (x cos + y sin)| at termination
    double residual_theta = 0.0; ///< |h'(theta)| at termination
    bool corner_limit = false; ///< true when the near-(1,1) limit was used
};

/// Root of W_r(., theta) = x cos theta + y sin theta in (0,1).
/// Requires (x,y) in the open unit quadrant and theta strictly interior.
double inner_max_radius(const PlanePoint& pt, double theta,
                        const SolverPolicy& solver = {},
                        const SeriesPolicy& series = {});

/// Unique zero of h'(theta) = r(theta)(-x sin theta + y cos theta)
///                            - W_theta(r(theta), theta) on (0, pi/2).
double outer_min_angle(const PlanePoint& pt, const SolverPolicy& solver = {},
                       const SeriesPolicy& series = {});

/// Full nested solve; (r* cos theta*, r* sin theta*) is grad u at the point.
MinimaxResult solve_minimax(const PlanePoint& pt, const SolverPolicy& solver = {},
                            const SeriesPolicy& series = {});

}  // namespace infpot
