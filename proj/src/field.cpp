#include "infpot/field.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace infpot {

namespace {

constexpr double kSeamTol = 1e-12;      // "on" a seam for value dispatch
constexpr double kHessianBand = 1e-6;   // Hessian refused closer than this
constexpr double kMedianSnap = 1e-4;    // median closed forms take over here
constexpr double kCenterStrip = 1e-2;   // snap band tapers towards the centre
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Folded {
    double x = 0.0;
    double y = 0.0;
    double sx = 1.0;  // gradient sign flip from x -> 2-x
    double sy = 1.0;
};

Folded fold(const PlanePoint& p, const char* who) {
    if (!(std::isfinite(p.x) && std::isfinite(p.y)))
        throw DomainError(std::string(who) + ": non-finite point");
    if (p.x < 0.0 || p.x > 2.0 || p.y < 0.0 || p.y > 2.0)
        throw DomainError(std::string(who) + ": point outside the square [0,2]x[0,2]");
    Folded f;
    f.x = p.x; f.y = p.y;
    if (f.x > 1.0) { f.x = 2.0 - f.x; f.sx = -1.0; }
    if (f.y > 1.0) { f.y = 2.0 - f.y; f.sy = -1.0; }
    return f;
}

bool on_boundary(const Folded& f) { return f.x <= kSeamTol || f.y <= kSeamTol; }
bool on_center(const Folded& f) {
    return std::fabs(f.x - 1.0) <= kSeamTol && std::fabs(f.y - 1.0) <= kSeamTol;
}

// The gradient image of a near-median point sits next to a corner of the
// hodograph quadrant, where the series cannot be resolved; the median closed
// forms take over on a band that tapers off towards the centre (there the
// minimax angle moves inward and the solver works again).
bool on_median_x(const Folded& f) {
    const double band = kMedianSnap * std::min(1.0, (1.0 - f.y) / kCenterStrip);
    return 1.0 - f.x <= std::max(band, kSeamTol);
}
bool on_median_y(const Folded& f) {
    const double band = kMedianSnap * std::min(1.0, (1.0 - f.x) / kCenterStrip);
    return 1.0 - f.y <= std::max(band, kSeamTol);
}
bool on_diagonal(const Folded& f) { return std::fabs(f.x - f.y) <= kSeamTol; }

// ℋu = (ℋw)^-1 assembled from W_rr and U_theta at the minimax, conjugated by
// the reflection signs
Hessian2 hessian_from_minimax(const MinimaxResult& m, const Folded& f,
                              const SeriesPolicy& series) {
    if (std::fabs(m.theta_star - kQuarterPi) < 1e-9)
        throw SingularHessianError("eval_hessian: theta* too close to pi/4");
    const WPartials wp = eval_W_partials({m.r_star, m.theta_star}, series);
    const double uth = eval_U_theta({m.r_star, m.theta_star}, series);
    const double r2 = m.r_star * m.r_star;
    const double c = std::cos(m.theta_star), s = std::sin(m.theta_star);
    const double wpp = c * c * wp.W_rr - 2.0 * s * c * uth / r2;
    const double wpq = s * c * wp.W_rr + (c * c - s * s) * uth / r2;
    const double wqq = s * s * wp.W_rr + 2.0 * s * c * uth / r2;
    const double det = wpp * wqq - wpq * wpq;  // equals -(U_theta)^2 / r^4
    if (det == 0.0)
        throw SingularHessianError("eval_hessian: singular hodograph Hessian");
    Hessian2 h;
    h.xx = wqq / det;
    h.xy = -wpq / det * (f.sx * f.sy);
    h.yy = wpp / det;
    return h;
}

// |grad u| on the outer edges: on the left edge at height t it is the root of
// W_theta(r, 0) = r t, unique since w_q(., 0) is strictly increasing.
double edge_gradient_magnitude(double t, const SolverPolicy& solver,
                               const SeriesPolicy& series) {
    double lo = 0.0, hi = 1.0, r = 0.8;
    for (int it = 0; it < solver.max_iter; ++it) {
        const WPartials wp = eval_W_partials({r, 0.0}, series);
        const double phi = wp.W_theta / r - t;      // negative below the root
        if (std::fabs(phi) < solver.root_tol) return r;
        if (phi < 0.0) lo = r; else hi = r;
        if (hi - lo < solver.bracket_shrink) return 0.5 * (lo + hi);
        const double uth = r * wp.W_rtheta - wp.W_theta;  // r^2 d(phi)/dr
        const double step = r - phi * r * r / uth;
        r = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw ConvergenceError("edge gradient: no convergence");
}

}  // namespace

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::InteriorOffDiagonal: return "interior-off-diagonal";
        case RegionTag::Diagonal: return "diagonal";
        case RegionTag::Median: return "median";
        case RegionTag::Boundary: return "boundary";
        case RegionTag::Center: return "center";
    }
    return "unknown";
}

double eval_u(const PlanePoint& p, const SolverPolicy& solver,
              const SeriesPolicy& series) {
    const Folded f = fold(p, "eval_u");
    if (on_boundary(f)) return 0.0;
    if (on_center(f)) return 1.0;
    if (on_median_x(f)) return f.y;
    if (on_median_y(f)) return f.x;
    if (on_diagonal(f)) return diagonal_value((f.x + f.y) / kSqrt2, solver, series).u;
    return solve_minimax({f.x, f.y}, solver, series).u;
}

std::array<double, 2> eval_grad(const PlanePoint& p, const SolverPolicy& solver,
                                const SeriesPolicy& series) {
    const Folded f = fold(p, "eval_grad");
    if (on_center(f))
        throw UndefinedValueError("eval_grad: gradient undefined at the centre (1,1)");
    if (f.x <= kSeamTol && f.y <= kSeamTol)
        throw UndefinedValueError("eval_grad: gradient undefined at the outer corners");

    double gx, gy;
    if (on_median_x(f)) {
        gx = 0.0; gy = 1.0;
    } else if (on_median_y(f)) {
        gx = 1.0; gy = 0.0;
    } else if (f.x <= kSeamTol) {
        gx = edge_gradient_magnitude(f.y, solver, series); gy = 0.0;
    } else if (f.y <= kSeamTol) {
        gx = 0.0; gy = edge_gradient_magnitude(f.x, solver, series);
    } else if (on_diagonal(f)) {
        const double g = diagonal_value((f.x + f.y) / kSqrt2, solver, series).g;
        gx = g / kSqrt2; gy = g / kSqrt2;
    } else {
        const MinimaxResult m = solve_minimax({f.x, f.y}, solver, series);
        gx = m.r_star * std::cos(m.theta_star);
        gy = m.r_star * std::sin(m.theta_star);
    }
    return {f.sx * gx, f.sy * gy};
}

Hessian2 eval_hessian(const PlanePoint& p, const SolverPolicy& solver,
                      const SeriesPolicy& series) {
    const Folded f = fold(p, "eval_hessian");
    if (!(f.x > kSeamTol && f.y > kSeamTol))
        throw DomainError("eval_hessian: point on the outer boundary");
    if (on_median_x(f) || on_median_y(f) || std::fabs(f.x - 1.0) <= kHessianBand ||
        std::fabs(f.y - 1.0) <= kHessianBand)
        throw DomainError("eval_hessian: refused on/near medians and centre");
    if (std::fabs(f.x - f.y) <= kHessianBand)
        throw SingularHessianError("eval_hessian: Hessian is singular on the diagonal");

    const MinimaxResult m = solve_minimax({f.x, f.y}, solver, series);
    return hessian_from_minimax(m, f, series);
}

DiagonalValue diagonal_value(double s, const SolverPolicy& solver,
                             const SeriesPolicy& series) {
    if (!(s >= -kSeamTol && s <= kSqrt2 + kSeamTol))
        throw DomainError("diagonal_value: s outside [0, sqrt2]");
    if (s <= kSeamTol) return {0.0, 0.0};
    if (s >= kSqrt2 - 1e-12) return {s - kSqrt2 + 1.0, 1.0};  // flat top: g = 1

    // W_r(., pi/4) = s is the inner first-order condition at (s/sqrt2, s/sqrt2)
    double lo = 0.0, hi = 1.0, r = std::min(std::max(std::cbrt(s * 3.0 * kPi / 16.0), 0.05), 0.95);
    for (int it = 0; it < solver.max_iter; ++it) {
        const WPartials wp = eval_W_partials({r, kQuarterPi}, series);
        const double psi = s - wp.W_r;
        if (std::fabs(psi) < solver.root_tol || hi - lo < solver.bracket_shrink) {
            const double g = (std::fabs(psi) < solver.root_tol) ? r : 0.5 * (lo + hi);
            return {s * g - eval_W({g, kQuarterPi}, series), g};
        }
        if (psi > 0.0) lo = r; else hi = r;
        const double step = r + psi / wp.W_rr;
        r = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    throw ConvergenceError("diagonal_value: no convergence");
}

double diagonal_transverse_second_derivative(double s, double offset,
                                             const SolverPolicy& solver,
                                             const SeriesPolicy& series) {
    if (offset == 0.0)
        throw DomainError("diagonal_transverse_second_derivative: offset must be nonzero");
    const double x = (s - offset) / kSqrt2;
    const double y = (s + offset) / kSqrt2;
    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
        throw DomainError("diagonal_transverse_second_derivative: offset point leaves the quadrant");

    const MinimaxResult m = solve_minimax({x, y}, solver, series);
    const WPartials wp = eval_W_partials({m.r_star, m.theta_star}, series);
    const double r = m.r_star;
    const double c = std::cos(m.theta_star), sn = std::sin(m.theta_star);
    const double a = wp.W_rtheta - wp.W_theta / r;  // U_theta / r
    return (2.0 * r * a * (sn * sn - c * c) - r * r * (c + sn) * (c + sn) * wp.W_rr) /
           (2.0 * a * a);
}

FieldSample sample_field(const PlanePoint& p, const SolverPolicy& solver,
                         const SeriesPolicy& series) {
    const Folded f = fold(p, "sample_field");
    FieldSample out;
    out.point = p;

    if (on_center(f)) {
        out.region = RegionTag::Center;
        out.u = 1.0;
        out.grad = {kNaN, kNaN};
        return out;
    }
    if (on_boundary(f)) {
        out.region = RegionTag::Boundary;
        out.u = 0.0;
        if (f.x <= kSeamTol && f.y <= kSeamTol)
            out.grad = {kNaN, kNaN};  // outer corner, direction undefined
        else
            out.grad = eval_grad(p, solver, series);
        return out;
    }

    const double med_dist = std::min(std::fabs(f.x - 1.0), std::fabs(f.y - 1.0));
    const double diag_dist = std::fabs(f.x - f.y);
    if (on_median_x(f) || on_median_y(f) || med_dist <= kHessianBand) {
        out.region = RegionTag::Median;
        out.u = eval_u(p, solver, series);
        out.grad = eval_grad(p, solver, series);
        return out;
    }
    if (on_diagonal(f) || diag_dist <= kHessianBand) {
        out.region = RegionTag::Diagonal;
        out.u = eval_u(p, solver, series);
        out.grad = eval_grad(p, solver, series);
        return out;
    }

    // interior off every seam: one solve yields value, gradient and Hessian
    out.region = RegionTag::InteriorOffDiagonal;
    const MinimaxResult m = solve_minimax({f.x, f.y}, solver, series);
    out.u = m.u;
    out.grad = {f.sx * m.r_star * std::cos(m.theta_star),
                f.sy * m.r_star * std::sin(m.theta_star)};
    out.hessian = hessian_from_minimax(m, f, series);
    return out;
}

}  // namespace infpot
