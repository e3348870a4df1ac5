#pragma once

#include <vector>

#include "infpot/types.hpp"

namespace infpot {

/// Closed first-series-term approximation of the potential on the unit
/// quadrant (a rotated copy of the classical |x|^(4/3)-type solution);
/// very accurate wherever |grad u| is small.
double aronsson_approximation(const PlanePoint& p);

/// u recovered as (4/pi) int_0^theta theta_2(2 psi, r^16) d psi; equals
/// U(r, theta). Requires r < 1.
double theta_integral_u(const PolarPoint& p, const SeriesPolicy& series = {},
                        double quad_tol = 1e-11);

/// d(r) = U(r, pi/4) - r, the gap between u and |grad u| along the diagonal.
double diagonal_excess(double r, const SeriesPolicy& series = {});

/// Evidence that the potential is not the ground state: d changes sign and is
/// strictly positive on a layer below r = 1.
struct DisproofReport {
    std::vector<double> r_grid;
    std::vector<double> d_values;
    double r_max = 0.0;         ///< argmax of d
    double d_max = 0.0;         ///< max of d, strictly positive
    double s0 = 0.0;            ///< diagonal arc length of the witness point
    double lambda_defect = 0.0; ///< 1 - |grad u|/u at the witness, positive
};

/// Scans d on a grid geometrically refined towards r = 1, locates the maximum
/// by golden-section refinement, and reports the witness point. Throws
/// std::logic_error when d_max <= 0 (that would be an implementation bug).
DisproofReport ground_state_disproof(int n_samples = 400,
                                     const SeriesPolicy& series = {});

}  // namespace infpot
