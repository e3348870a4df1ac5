#include "infpot/minimax.hpp"

#include <cmath>
#include <string>

namespace infpot {

namespace {

constexpr double kAngleClamp = 1e-9;    // outer bracket is [eps, pi/2 - eps]
constexpr double kCornerClamp = 1e-9;   // near-(1,1) closed-form switch

void validate_quadrant(const PlanePoint& pt, const char* who) {
    if (!(pt.x > 0.0 && pt.x < 1.0 && pt.y > 0.0 && pt.y < 1.0))
        throw DomainError(std::string(who) + ": point must lie in the open unit quadrant");
}

struct InnerResult {
    double r = 0.0;
    double residual = 0.0;
    int iters = 0;
};

// Safeguarded Newton for W_r(r, theta) = c. W_r is 0 at r=0, increasing in r
// (W_rr > 0) and cos+sin at r=1, so any c in (0, cos+sin) brackets on [0,1].
InnerResult inner_solve(double c, double theta, double r_init,
                        const SolverPolicy& solver, const SeriesPolicy& series) {
    const double wall = std::cos(theta) + std::sin(theta);
    if (!(c > 0.0) || !(c < wall))
        throw BracketError("inner_max_radius: target outside (0, cos+sin); point not in the open quadrant?");

    double lo = 0.0, hi = 1.0;
    double r = r_init;
    if (!(r > lo && r < hi)) r = 0.5;

    InnerResult out;
    for (int it = 0; it < solver.max_iter; ++it) {
        const WPartials wp = eval_W_partials({r, theta}, series);
        const double psi = c - wp.W_r;  // positive below the root
        out.iters = it + 1;
        out.r = r;
        out.residual = std::fabs(psi);
        // where W_r flattens (W_rr small) the raw residual overstates the
        // accuracy of r, so scale the acceptance with the local slope
        if (out.residual <= solver.root_tol * std::min(1.0, wp.W_rr)) return out;
        if (psi > 0.0) lo = r; else hi = r;
        if (hi - lo < solver.bracket_shrink) {
            out.r = 0.5 * (lo + hi);
            return out;
        }
        const double step = r + psi / wp.W_rr;  // d(psi)/dr = -W_rr
        r = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw ConvergenceError("inner_max_radius: no convergence after max_iter iterations");
}

double initial_radius(double c, double theta) {
    // invert the leading series term W_r ~ (16/(3 pi)) r^3 sin(2 theta)
    const double s2 = std::max(std::sin(2.0 * theta), 1e-3);
    const double guess = std::cbrt(c * 3.0 * kPi / (16.0 * s2));
    return std::min(std::max(guess, 0.05), 0.95);
}

struct OuterResult {
    double theta = 0.0;
    double r = 0.0;
    double residual_theta = 0.0;
    double residual_r = 0.0;
    int outer_iters = 0;
    int inner_iters = 0;
};

// Safeguarded Newton for h'(theta) = 0. h' is strictly increasing with
// closed-form endpoint signs h'(0) = y-1 < 0 and h'(pi/2) = 1-x > 0, so the
// bracket endpoints never need a series evaluation.
OuterResult outer_solve(const PlanePoint& pt, const SolverPolicy& solver,
                        const SeriesPolicy& series) {
    const double x = pt.x, y = pt.y;
    OuterResult out;

    if (x == y) {
        // symmetry pins the angle; one inner solve finishes the job
        const double c = (x + y) / kSqrt2;
        const InnerResult ir = inner_solve(c, kQuarterPi, initial_radius(c, kQuarterPi),
                                           solver, series);
        out.theta = kQuarterPi;
        out.r = ir.r;
        out.residual_r = ir.residual;
        out.inner_iters = ir.iters;
        const WPartials wp = eval_W_partials({ir.r, kQuarterPi}, series);
        out.residual_theta = std::fabs(ir.r * (-x + y) / kSqrt2 - wp.W_theta);
        return out;
    }

    double lo = kAngleClamp, hi = kHalfPi - kAngleClamp;

    // first approximation of the gradient direction seeds the iteration
    const double cbr = std::cbrt(3.0 * kPi) / 2.0;
    const double pa = 0.5 * cbr * (std::cbrt(x + y) + std::cbrt(y - x));
    const double qa = 0.5 * cbr * (std::cbrt(x + y) - std::cbrt(y - x));
    double theta = std::atan2(qa, pa);
    theta = std::min(std::max(theta, 1e-6), kHalfPi - 1e-6);

    double r_warm = -1.0;
    for (int it = 0; it < solver.max_iter; ++it) {
        const double c = x * std::cos(theta) + y * std::sin(theta);
        InnerResult ir;
        try {
            ir = inner_solve(c, theta,
                             r_warm > 0.0 ? r_warm : initial_radius(c, theta),
                             solver, series);
        } catch (const TruncationError&) {
            // the balance radius has entered the unresolvable fringe next to
            // r = 1, which happens towards the angular endpoints; retreat
            if (theta > kQuarterPi) hi = theta; else lo = theta;
            if (hi - lo < solver.bracket_shrink) throw;
            theta = 0.5 * (lo + hi);
            continue;
        } catch (const CornerSingularityError&) {
            if (theta > kQuarterPi) hi = theta; else lo = theta;
            if (hi - lo < solver.bracket_shrink) throw;
            theta = 0.5 * (lo + hi);
            continue;
        }
        r_warm = ir.r;
        out.inner_iters += ir.iters;
        const WPartials wp = eval_W_partials({ir.r, theta}, series);
        const double drift = -x * std::sin(theta) + y * std::cos(theta);
        const double hp = ir.r * drift - wp.W_theta;

        out.theta = theta;
        out.r = ir.r;
        out.residual_theta = std::fabs(hp);
        out.residual_r = ir.residual;
        out.outer_iters = it + 1;
        if (out.residual_theta < solver.root_tol) return out;

        if (hp < 0.0) lo = theta; else hi = theta;
        if (hi - lo < solver.bracket_shrink) {
            out.theta = 0.5 * (lo + hi);
            return out;
        }
        // h'' = (r')^2 W_rr with r' W_rr = -x sin + y cos - W_rtheta
        const double rp_num = drift - wp.W_rtheta;
        const double hpp = rp_num * rp_num / wp.W_rr;
        const double step = theta - hp / hpp;
        theta = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw ConvergenceError("outer_min_angle: no convergence after max_iter iterations");
}

}  // namespace

double inner_max_radius(const PlanePoint& pt, double theta,
                        const SolverPolicy& solver, const SeriesPolicy& series) {
    solver.validate();
    validate_quadrant(pt, "inner_max_radius");
    if (!(theta > 0.0 && theta < kHalfPi))
        throw DomainError("inner_max_radius: theta must be strictly inside (0, pi/2)");
    const double c = pt.x * std::cos(theta) + pt.y * std::sin(theta);
    return inner_solve(c, theta, initial_radius(c, theta), solver, series).r;
}

double outer_min_angle(const PlanePoint& pt, const SolverPolicy& solver,
                       const SeriesPolicy& series) {
    solver.validate();
    validate_quadrant(pt, "outer_min_angle");
    return outer_solve(pt, solver, series).theta;
}

MinimaxResult solve_minimax(const PlanePoint& pt, const SolverPolicy& solver,
                            const SeriesPolicy& series) {
    solver.validate();
    validate_quadrant(pt, "solve_minimax");

    MinimaxResult res;
    if (std::min(1.0 - pt.x, 1.0 - pt.y) < kCornerClamp) {
        // r* -> 1 makes the series cost explode here; the two potential bounds
        // pinch, so return their common limit
        const double dx = 1.0 - pt.x, dy = 1.0 - pt.y;
        res.r_star = 1.0;
        res.theta_star = std::atan2(dy, dx);
        res.u = 1.0 - std::hypot(dx, dy);
        res.corner_limit = true;
        return res;
    }

    const OuterResult outer = outer_solve(pt, solver, series);
    res.r_star = outer.r;
    res.theta_star = outer.theta;
    res.inner_iters = outer.inner_iters;
    res.outer_iters = outer.outer_iters;
    res.residual_r = outer.residual_r;
    res.residual_theta = outer.residual_theta;
    const double c = pt.x * std::cos(outer.theta) + pt.y * std::sin(outer.theta);
    res.u = outer.r * c - eval_W({outer.r, outer.theta}, series);
    return res;
}

}  // namespace infpot
