#include "infpot/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "infpot/quadrature.hpp"
#include "infpot/series.hpp"

namespace infpot {

double aronsson_approximation(const PlanePoint& p) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
        throw DomainError("aronsson_approximation: point outside the unit quadrant");
    const double lo = std::min(p.x, p.y);
    const double hi = std::max(p.x, p.y);  // formula as written needs y >= x
    const double c = std::cbrt(3.0 * kPi) / 2.0;
    return 3.0 * c / 8.0 *
           (std::pow(hi + lo, 4.0 / 3.0) - std::pow(hi - lo, 4.0 / 3.0));
}

double theta_integral_u(const PolarPoint& p, const SeriesPolicy& series,
                        double quad_tol) {
    if (p.r >= 1.0) throw DomainError("theta_integral_u: requires r < 1");
    if (!(p.r >= 0.0 && p.theta >= 0.0 && p.theta <= kHalfPi + 1e-12))
        throw DomainError("theta_integral_u: point outside the closed quadrant");
    if (p.theta <= 0.0) return 0.0;
    const double q = std::pow(p.r, 16.0);
    // the product form conditions better once the nome gets close to 1
    const Theta2Form form = (q > 0.9) ? Theta2Form::Product : Theta2Form::Series;
    const auto integrand = [&](double psi) {
        return eval_theta2(2.0 * psi, q, form, series);
    };
    const QuadResult res = integrate_gk(integrand, 0.0, p.theta, quad_tol);
    return 4.0 / kPi * res.value;
}

double diagonal_excess(double r, const SeriesPolicy& series) {
    return eval_U({r, kQuarterPi}, series) - r;
}

DisproofReport ground_state_disproof(int n_samples, const SeriesPolicy& series) {
    if (n_samples < 100)
        throw DomainError("ground_state_disproof: need at least 100 samples");

    // uniform scan plus geometric refinement towards r = 1, where the sign
    // change lives; 2^-30 keeps the series inside its resolvable range
    std::set<double> grid;
    for (int i = 0; i <= n_samples; ++i)
        grid.insert(static_cast<double>(i) / n_samples);
    for (int k = 1; k <= 30; ++k)
        grid.insert(1.0 - std::ldexp(1.0, -k));

    DisproofReport rep;
    rep.r_grid.assign(grid.begin(), grid.end());
    rep.d_values.reserve(rep.r_grid.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < rep.r_grid.size(); ++i) {
        rep.d_values.push_back(diagonal_excess(rep.r_grid[i], series));
        if (rep.d_values[i] > rep.d_values[best]) best = i;
    }

    // golden-section refinement of the maximum on the bracketing interval
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = rep.r_grid[best > 0 ? best - 1 : 0];
    double b = rep.r_grid[std::min(best + 1, rep.r_grid.size() - 1)];
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = diagonal_excess(x1, series), f2 = diagonal_excess(x2, series);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = diagonal_excess(x2, series);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = diagonal_excess(x1, series);
        }
    }
    rep.r_max = 0.5 * (a + b);
    rep.d_max = diagonal_excess(rep.r_max, series);
    if (!(rep.d_max > 0.0))
        throw std::logic_error("ground_state_disproof: d_max <= 0; this contradicts "
                               "the established sign layer and is a bug");

    const double u_at = eval_U({rep.r_max, kQuarterPi}, series);
    rep.s0 = eval_W_partials({rep.r_max, kQuarterPi}, series).W_r;
    rep.lambda_defect = 1.0 - rep.r_max / u_at;
    return rep;
}

}  // namespace infpot
