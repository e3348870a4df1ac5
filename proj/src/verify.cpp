#include "infpot/verify.hpp"

#include <cmath>
#include <functional>

#include "infpot/analysis.hpp"
#include "infpot/field.hpp"
#include "infpot/minimax.hpp"
#include "infpot/parallel.hpp"
#include "infpot/sampling.hpp"
#include "infpot/series.hpp"

namespace infpot {

namespace {

// "worst value below bound" style check
CheckResult bounded(std::string name, double measured, double tolerance) {
    return {std::move(name), measured < tolerance, measured, tolerance};
}

// "must be strictly positive" style check: measured is the smallest value seen
CheckResult positive(std::string name, double measured) {
    return {std::move(name), measured > 0.0, measured, 0.0};
}

double max_reduce(std::size_t count, const std::function<double(std::size_t)>& fn) {
    std::vector<double> vals(count, 0.0);
    parallel_for(count, [&](std::size_t i) { vals[i] = fn(i); });
    double m = -1e300;
    for (double v : vals) m = std::max(m, v);
    return m;
}

double min_reduce(std::size_t count, const std::function<double(std::size_t)>& fn) {
    return -max_reduce(count, [&](std::size_t i) { return -fn(i); });
}

PolarPoint halton_polar(unsigned long i) {
    return {halton(i, 2), kHalfPi * halton(i, 3)};
}

}  // namespace

SuiteReport verify_series(const SeriesPolicy& series) {
    SuiteReport rep{"series", {}};

    rep.checks.push_back(positive(
        "positivity: min of {W, W_r, W_rr} over 1000 quasi-random interior points",
        min_reduce(1000, [&](std::size_t i) {
            const PolarPoint p = halton_polar(i + 1);
            if (p.r == 0.0 || p.theta == 0.0) return 1.0;
            const WPartials wp = eval_W_partials(p, series);
            return std::min({eval_W(p, series), wp.W_r, wp.W_rr});
        })));

    rep.checks.push_back(bounded(
        "polar equation: max |r W_r + W_thetatheta| over 200 interior points",
        max_reduce(200, [&](std::size_t i) {
            const PolarPoint p = halton_polar(i + 1);
            if (p.r == 0.0 || p.theta == 0.0) return 0.0;
            return std::fabs(p.r * eval_W_partials(p, series).W_r +
                             eval_W_theta_theta(p, series));
        }),
        1e-10));

    rep.checks.push_back(positive(
        "U_theta sign: min of U_theta * (pi/4 - theta) off the diagonal",
        min_reduce(500, [&](std::size_t i) {
            PolarPoint p = halton_polar(i + 1);
            p.r = 0.02 + 0.96 * p.r;
            if (std::fabs(p.theta - kQuarterPi) < 1e-6) return 1.0;
            return eval_U_theta(p, series) * (kQuarterPi - p.theta);
        })));

    {
        double worst = 0.0;
        for (double q : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99})
            for (int iz = 0; iz <= 24; ++iz) {
                const double z = kPi * iz / 24.0;
                worst = std::max(worst,
                                 std::fabs(eval_theta2(z, q, Theta2Form::Series, series) -
                                           eval_theta2(z, q, Theta2Form::Product, series)));
            }
        rep.checks.push_back(bounded(
            "theta2: max |series - product| on the (z,q) grid", worst, 1e-12));
    }

    rep.checks.push_back(bounded(
        "U_theta = (4/pi) theta2(2 theta, r^16): max gap for r <= 0.99",
        max_reduce(400, [&](std::size_t i) {
            PolarPoint p = halton_polar(i + 1);
            p.r *= 0.99;
            return std::fabs(eval_U_theta(p, series) -
                             4.0 / kPi * eval_theta2(2.0 * p.theta, std::pow(p.r, 16.0),
                                                     Theta2Form::Series, series));
        }),
        1e-12));

    {
        // closed boundary derivative against a long partial sum of its series
        double worst = 0.0;
        for (int k = 1; k <= 9; ++k) {
            const double th = 0.1 + (kHalfPi - 0.2) * (k - 1) / 8.0;
            long double sum = 0.0L;
            for (long n = 1; n <= 200000; ++n) {
                const long double m = 4.0L * n - 2.0L;
                sum += std::cos(m * static_cast<long double>(th)) / (m * m - 1.0L);
            }
            const double series_val = static_cast<double>(8.0L / kPi * sum);
            const double closed = std::fabs(std::cos(th)) - std::fabs(std::sin(th));
            worst = std::max(worst, std::fabs(series_val - closed));
        }
        rep.checks.push_back(bounded(
            "boundary Fourier: W_theta(1,.) closed form vs 2e5-term partial sums",
            worst, 1e-8));
    }

    {
        SeriesPolicy tight = series;
        tight.abs_tol = 1e-18;
        const double worst = max_reduce(200, [&](std::size_t i) {
            PolarPoint p = halton_polar(i + 1);
            p.r *= 0.999;
            return std::fabs(eval_W(p, series) - eval_W(p, tight));
        });
        rep.checks.push_back(bounded(
            "truncation soundness: |W(tol=1e-15) - W(tol=1e-18)| at r <= 0.999",
            worst, 1e-14));
    }
    return rep;
}

SuiteReport verify_minimax(const SolverPolicy& solver, const SeriesPolicy& series) {
    SuiteReport rep{"minimax", {}};
    Halton2 seq;
    std::vector<PlanePoint> pts;
    while (pts.size() < 50) {
        PlanePoint p = seq.next();
        p.x = 0.02 + 0.96 * p.x;
        p.y = 0.02 + 0.96 * p.y;
        pts.push_back(p);
    }

    rep.checks.push_back(bounded(
        "first-order conditions: max residual over 50 points",
        max_reduce(pts.size(), [&](std::size_t i) {
            const MinimaxResult m = solve_minimax(pts[i], solver, series);
            return std::max(m.residual_r, m.residual_theta);
        }),
        10.0 * solver.root_tol));

    rep.checks.push_back(positive(
        "saddle: min of finite-difference h'' at the angle, off-diagonal points",
        min_reduce(pts.size(), [&](std::size_t i) {
            PlanePoint p = pts[i];
            if (std::fabs(p.x - p.y) < 1e-3) p.x = std::max(0.02, p.x - 0.1);
            const MinimaxResult m = solve_minimax(p, solver, series);
            const double d = 1e-4;
            const double r0 = inner_max_radius(p, m.theta_star - d, solver, series);
            const double r2 = inner_max_radius(p, m.theta_star + d, solver, series);
            const double rp = (r2 - r0) / (2.0 * d);
            return rp * rp * eval_W_partials({m.r_star, m.theta_star}, series).W_rr;
        })));

    {
        // dense angular grid plus a concave golden-section inner max; shares
        // only the series kernel with the nested solver it checks
        const PlanePoint pt{0.3, 0.7};
        const auto objective = [&](double r, double th) {
            const double w = (r >= 1.0) ? (std::cos(th) + std::sin(th) - 1.0)
                                        : eval_W({r, th}, series);
            return r * (pt.x * std::cos(th) + pt.y * std::sin(th)) - w;
        };
        const auto max_over_r = [&](double th) {
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double a = 0.0, b = 1.0;
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = objective(x1, th), f2 = objective(x2, th);
            for (int it = 0; it < 80; ++it) {
                if (f1 > f2) {
                    b = x2; x2 = x1; f2 = f1;
                    x1 = b - gr * (b - a); f1 = objective(x1, th);
                } else {
                    a = x1; x1 = x2; f1 = f2;
                    x2 = a + gr * (b - a); f2 = objective(x2, th);
                }
            }
            return std::max(f1, f2);
        };
        double best_th = 0.0, best_u = 1e300;
        for (int jt = 0; jt <= 200; ++jt) {
            const double th = kHalfPi * jt / 200.0;
            const double mx = max_over_r(th);
            if (mx < best_u) { best_u = mx; best_th = th; }
        }
        double tw = kHalfPi / 200.0;
        for (int round = 0; round < 4; ++round) {
            const double tlo = std::max(0.0, best_th - 2 * tw);
            const double thi = std::min(kHalfPi, best_th + 2 * tw);
            best_u = 1e300;
            for (int jt = 0; jt <= 60; ++jt) {
                const double th = tlo + (thi - tlo) * jt / 60.0;
                const double mx = max_over_r(th);
                if (mx < best_u) { best_u = mx; best_th = th; }
            }
            tw = (thi - tlo) / 60.0;
        }
        const MinimaxResult m = solve_minimax(pt, solver, series);
        rep.checks.push_back(bounded(
            "oracle: |nested solve - dense grid minimax| in u at (0.3, 0.7)",
            std::fabs(m.u - best_u), 1e-6));
    }

    rep.checks.push_back(bounded(
        "gradient: max |grad - central difference| over 20 off-diagonal points",
        max_reduce(20, [&](std::size_t i) {
            PlanePoint p = pts[i];
            if (std::fabs(p.x - p.y) < 0.02) p.y = std::min(0.98, p.y + 0.05);
            const MinimaxResult m = solve_minimax(p, solver, series);
            const double h = 1e-5;
            const double ux = (solve_minimax({p.x + h, p.y}, solver, series).u -
                               solve_minimax({p.x - h, p.y}, solver, series).u) / (2 * h);
            const double uy = (solve_minimax({p.x, p.y + h}, solver, series).u -
                               solve_minimax({p.x, p.y - h}, solver, series).u) / (2 * h);
            return std::max(std::fabs(ux - m.r_star * std::cos(m.theta_star)),
                            std::fabs(uy - m.r_star * std::sin(m.theta_star)));
        }),
        1e-8));

    {
        double prev = 0.0, worst = 1.0;
        for (int k = 1; k <= 100; ++k) {
            const double s = kSqrt2 * k / 101.0;
            const double u = diagonal_value(s, solver, series).u;
            worst = std::min(worst, u - prev);
            prev = u;
        }
        rep.checks.push_back(positive(
            "monotone diagonal: min forward difference of u along the diagonal", worst));
    }
    return rep;
}

SuiteReport verify_field(const SolverPolicy& solver, const SeriesPolicy& series) {
    SuiteReport rep{"field", {}};

    {
        // bounds squeeze sampled over the full square
        const int n = 100;
        const double worst = max_reduce(static_cast<std::size_t>(n + 1), [&](std::size_t ii) {
            double w = -1e300;
            for (int jj = 0; jj <= n; ++jj) {
                const double x = 2.0 * static_cast<double>(ii) / n;
                const double y = 2.0 * jj / n;
                const double u = eval_u({x, y}, solver, series);
                const double lower = 1.0 - std::hypot(1.0 - x, 1.0 - y);
                const double upper = std::min(std::min(x, 2.0 - x), std::min(y, 2.0 - y));
                w = std::max(w, std::max(lower - u, u - upper));
            }
            return w;
        });
        rep.checks.push_back(bounded(
            "bounds: max violation of cone lower / distance upper bound on 101x101",
            worst, 1e-9));
    }

    rep.checks.push_back(bounded(
        "eight-fold symmetry: max |u(x,y) - u(sym)| over 200 points",
        max_reduce(200, [&](std::size_t i) {
            Halton2 seq;
            seq.index = 113 * (i + 1);
            PlanePoint p = seq.next();
            p.x *= 2.0; p.y *= 2.0;
            const double u = eval_u(p, solver, series);
            double w = 0.0;
            w = std::max(w, std::fabs(u - eval_u({p.y, p.x}, solver, series)));
            w = std::max(w, std::fabs(u - eval_u({2.0 - p.x, p.y}, solver, series)));
            w = std::max(w, std::fabs(u - eval_u({p.x, 2.0 - p.y}, solver, series)));
            return w;
        }),
        1e-13));

    {
        // seam consistency: gradients on medians and diagonal against the
        // limits of the two adjacent patches, plus a shrinking-offset trend
        double seam_worst = 0.0;
        for (int k = 1; k <= 50; ++k) {
            const double t = 0.05 + 0.9 * (k - 1) / 49.0;
            const auto gm = eval_grad({1.0, t}, solver, series);
            seam_worst = std::max(seam_worst, std::fabs(gm[0] - 0.0));
            seam_worst = std::max(seam_worst, std::fabs(gm[1] - 1.0));
            const auto gd = eval_grad({t, t}, solver, series);
            seam_worst = std::max(seam_worst, std::fabs(gd[0] - gd[1]));
        }
        rep.checks.push_back(bounded(
            "C1 seams: median gradient is the unit median direction; diagonal "
            "gradient lies along the diagonal",
            seam_worst, 1e-8));

        double trend_worst = -1e300;
        for (double s : {0.3, 0.7, 1.0}) {
            const double gdiag = diagonal_value(s, solver, series).g;
            double prev = 1e300;
            for (double eps : {1e-2, 1e-3, 1e-4}) {
                const auto gl = eval_grad(
                    {(s - eps) / kSqrt2, (s + eps) / kSqrt2}, solver, series);
                const double mis = std::hypot(gl[0] - gdiag / kSqrt2, gl[1] - gdiag / kSqrt2);
                trend_worst = std::max(trend_worst, mis - prev);
                prev = mis;
            }
        }
        rep.checks.push_back(bounded(
            "C1 seams: gradient mismatch decays as the diagonal is approached",
            trend_worst, 0.0));
    }

    rep.checks.push_back(bounded(
        "infinity-harmonic: max |grad . H . grad| at 1000 off-diagonal points",
        max_reduce(1000, [&](std::size_t i) {
            Halton2 seq;
            seq.index = i;
            PlanePoint p = seq.next();
            p.x = 0.02 + 0.96 * p.x;
            p.y = 0.02 + 0.96 * p.y;
            if (std::fabs(p.x - p.y) < 1e-4) return 0.0;
            const auto g = eval_grad(p, solver, series);
            const Hessian2 h = eval_hessian(p, solver, series);
            return std::fabs(g[0] * g[0] * h.xx + 2.0 * g[0] * g[1] * h.xy +
                             g[1] * g[1] * h.yy);
        }),
        1e-9));

    rep.checks.push_back(bounded(
        "Hessian vs central differences: max relative entry error, 20 points",
        max_reduce(20, [&](std::size_t i) {
            Halton2 seq;
            seq.index = 1 + 37 * i;
            PlanePoint p = seq.next();
            p.x = 0.15 + 0.7 * p.x;
            p.y = 0.15 + 0.7 * p.y;
            if (std::fabs(p.x - p.y) < 0.1) p.y = std::min(0.85, p.y + 0.15);
            if (std::fabs(p.x - 1.0) < 0.05) p.x -= 0.1;
            const Hessian2 hs = eval_hessian(p, solver, series);
            const double h = 1e-4;
            const auto u = [&](double a, double b) { return eval_u({a, b}, solver, series); };
            const double uxx =
                (u(p.x + h, p.y) - 2 * u(p.x, p.y) + u(p.x - h, p.y)) / (h * h);
            const double uyy =
                (u(p.x, p.y + h) - 2 * u(p.x, p.y) + u(p.x, p.y - h)) / (h * h);
            const double uxy = (u(p.x + h, p.y + h) - u(p.x + h, p.y - h) -
                                u(p.x - h, p.y + h) + u(p.x - h, p.y - h)) /
                               (4 * h * h);
            const double scale = std::max({std::fabs(hs.xx), std::fabs(hs.xy),
                                           std::fabs(hs.yy), 1e-3});
            return std::max({std::fabs(uxx - hs.xx), std::fabs(uxy - hs.xy),
                             std::fabs(uyy - hs.yy)}) / scale;
        }),
        1e-5));

    {
        double worst = -1e300;
        double um = diagonal_value(kSqrt2 * 1.0 / 1001.0, solver, series).u;
        double up = diagonal_value(kSqrt2 * 2.0 / 1001.0, solver, series).u;
        double gprev = 0.0;
        bool g_monotone = true;
        for (int k = 2; k < 1000; ++k) {
            const DiagonalValue dv = diagonal_value(kSqrt2 * (k + 1) / 1001.0, solver, series);
            worst = std::max(worst, -(dv.u - 2.0 * up + um));
            um = up;
            up = dv.u;
            if (dv.g <= gprev) g_monotone = false;
            gprev = dv.g;
        }
        rep.checks.push_back(bounded(
            "diagonal convexity: max negated second difference of u(s 1)", worst, 0.0));
        rep.checks.push_back({"diagonal g strictly increasing", g_monotone,
                              g_monotone ? 1.0 : 0.0, 0.0});
    }
    return rep;
}

SuiteReport verify_analysis(const SolverPolicy& solver, const SeriesPolicy& series) {
    SuiteReport rep{"analysis", {}};

    {
        const double anchor = aronsson_approximation({1.0, 1.0});
        rep.checks.push_back(bounded(
            "first approximation anchor |A(1,1) - 0.99800|",
            std::fabs(anchor - 0.99800), 1e-5));
    }

    rep.checks.push_back(bounded(
        "small-gradient regime: max |A - u| where |grad u| <= 0.3",
        max_reduce(50, [&](std::size_t i) {
            Halton2 seq;
            seq.index = 3 * (i + 1);
            PlanePoint p = seq.next();
            p.x = 0.001 + 0.03 * p.x;
            p.y = 0.001 + 0.03 * p.y;
            const MinimaxResult m = solve_minimax(p, solver, series);
            if (m.r_star > 0.3) return 0.0;
            return std::fabs(aronsson_approximation(p) - m.u);
        }),
        1e-5));

    {
        double worst = 0.0;
        for (int ir = 1; ir <= 20; ++ir)
            for (int it = 1; it <= 20; ++it) {
                const PolarPoint p{0.95 * ir / 20.0, kHalfPi * it / 20.0};
                worst = std::max(worst, std::fabs(theta_integral_u(p, series) -
                                                  eval_U(p, series)));
            }
        rep.checks.push_back(bounded(
            "heat representation: max |theta-integral - U| on the 20x20 grid",
            worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (double r : {0.3, 0.6, 0.9, 0.95}) {
            const double h = 1e-6;
            const double fd = (diagonal_excess(r + h, series) -
                               diagonal_excess(r - h, series)) / (2.0 * h);
            const double exact = eval_Ur_diagonal(r, series, Theta2Form::Product) - 1.0;
            worst = std::max(worst, std::fabs(fd - exact));
        }
        rep.checks.push_back(bounded(
            "d'(r) = U_r - 1 matches finite differences", worst, 1e-6));
        // d'(1-) + 1 = U_r(1-), which the product form sends to zero
        rep.checks.push_back(bounded(
            "d'(1-) = -1 via the product form",
            std::fabs(eval_Ur_diagonal(1.0 - 1e-6, series, Theta2Form::Product)), 1e-3));
    }

    {
        const DisproofReport dr = ground_state_disproof(400, series);
        rep.checks.push_back(positive("disproof: d_max > 0", dr.d_max));
        rep.checks.push_back(positive("disproof: defect 1 - |grad u|/u > 0 at witness",
                                      dr.lambda_defect));
        rep.checks.push_back(bounded("disproof: d(0.9) negative",
                                     diagonal_excess(0.9, series), 0.0));
        rep.checks.push_back(positive("disproof: d(0.99) positive",
                                      diagonal_excess(0.99, series)));
    }
    return rep;
}

std::vector<SuiteReport> verify_all(const SolverPolicy& solver, const SeriesPolicy& series) {
    return {verify_series(series), verify_minimax(solver, series),
            verify_field(solver, series), verify_analysis(solver, series)};
}

}  // namespace infpot
