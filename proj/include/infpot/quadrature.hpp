#pragma once

#include <functional>

#include "infpot/types.hpp"

namespace infpot {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b] to an absolute
/// tolerance. Throws ConvergenceError when the recursion depth is exhausted.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-11, int max_depth = 48);

}  // namespace infpot
