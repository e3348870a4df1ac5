#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "infpot/minimax.hpp"
#include "infpot/sampling.hpp"
#include "infpot/series.hpp"

using namespace infpot;

namespace {

double objective(const PlanePoint& pt, double r, double th) {
    const double w = (r >= 1.0) ? (std::cos(th) + std::sin(th) - 1.0) : eval_W({r, th});
    return r * (pt.x * std::cos(th) + pt.y * std::sin(th)) - w;
}

// f(., th) is concave in r, so golden-section realises the exact inner max
double max_over_r(const PlanePoint& pt, double th) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.0, b = 1.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = objective(pt, x1, th), f2 = objective(pt, x2, th);
    for (int it = 0; it < 80; ++it) {
        if (f1 > f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = objective(pt, x1, th);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = objective(pt, x2, th);
        }
    }
    return std::max(f1, f2);
}

// dense-grid minimax (401 x 401) followed by window refinement in the angle;
// shares only the series kernel with the nested solver it checks
double grid_minimax(const PlanePoint& pt) {
    const int n = 400;
    double best_th = 0.0, minimax = 1e300;
    for (int jt = 0; jt <= n; ++jt) {
        const double th = kHalfPi * jt / n;
        double mx = -1e300;
        for (int ir = 0; ir <= n; ++ir) {
            const double f = objective(pt, static_cast<double>(ir) / n, th);
            mx = std::max(mx, f);
        }
        if (mx < minimax) {
            minimax = mx;
            best_th = th;
        }
    }
    double tw = kHalfPi / n;
    for (int round = 0; round < 4; ++round) {
        const double tlo = std::max(0.0, best_th - 2 * tw);
        const double thi = std::min(kHalfPi, best_th + 2 * tw);
        minimax = 1e300;
        for (int jt = 0; jt <= 80; ++jt) {
            const double th = tlo + (thi - tlo) * jt / 80;
            const double mx = max_over_r(pt, th);
            if (mx < minimax) {
                minimax = mx;
                best_th = th;
            }
        }
        tw = (thi - tlo) / 80;
    }
    return minimax;
}

}  // namespace

TEST_CASE("inner radius: frozen root and monotone approach to r = 1") {
    CHECK(inner_max_radius({0.5, 0.5}, kQuarterPi) ==
          doctest::Approx(0.74681892164608345992).epsilon(1e-11));
    // towards the angular endpoints the root runs into the corner
    const double r2 = inner_max_radius({0.5, 0.5}, 1e-2);
    const double r3 = inner_max_radius({0.5, 0.5}, 1e-3);
    CHECK(r3 > r2);
    CHECK(1.0 - r3 < 1e-5);
    // near the far corner the balance point creeps towards the unit circle
    // (slowly: W_r flattens out against r = 1)
    const double c1 = inner_max_radius({0.99, 0.99}, kQuarterPi);
    const double c2 = inner_max_radius({0.999, 0.999}, kQuarterPi);
    const double c3 = inner_max_radius({0.99999, 0.99999}, kQuarterPi);
    CHECK(c1 > 0.9);
    CHECK(c2 > c1);
    CHECK(c3 > c2);
}

TEST_CASE("inner radius: residual meets the stated tolerance") {
    SolverPolicy sp;
    for (unsigned long i = 1; i <= 25; ++i) {
        const PlanePoint p{0.05 + 0.9 * halton(i, 2), 0.05 + 0.9 * halton(i, 3)};
        const double th = 0.05 + (kHalfPi - 0.1) * halton(i, 5);
        const double r = inner_max_radius(p, th, sp);
        const double c = p.x * std::cos(th) + p.y * std::sin(th);
        CHECK(std::fabs(eval_W_partials({r, th}).W_r - c) < 10.0 * sp.root_tol);
    }
}

TEST_CASE("inner radius: domain and bracket errors") {
    CHECK_THROWS_AS((void)inner_max_radius({1.2, 0.5}, kQuarterPi), DomainError);
    CHECK_THROWS_AS((void)inner_max_radius({0.5, 0.5}, 0.0), DomainError);
    CHECK_THROWS_AS((void)inner_max_radius({0.5, 0.5}, kHalfPi), DomainError);
}

TEST_CASE("outer angle: diagonal pins pi/4, reflection swaps the angle") {
    CHECK(outer_min_angle({0.5, 0.5}) == kQuarterPi);
    CHECK(outer_min_angle({0.123, 0.123}) == kQuarterPi);

    const double th1 = outer_min_angle({0.25, 0.75});
    const double th2 = outer_min_angle({0.75, 0.25});
    CHECK(th1 == doctest::Approx(0.097635392439644515).epsilon(1e-9));
    CHECK(th1 + th2 == doctest::Approx(kHalfPi).epsilon(1e-12));

    // the gradient tilts towards the nearer median: above the diagonal the
    // angle drops below pi/4, below it the angle exceeds pi/4
    CHECK(th1 < kQuarterPi);
    CHECK(th2 > kQuarterPi);
    CHECK(outer_min_angle({0.4, 0.6}) < kQuarterPi);
    CHECK(outer_min_angle({0.6, 0.4}) > kQuarterPi);
}

TEST_CASE("solve: frozen saddle data at (0.5, 0.5) and (0.3, 0.7)") {
    const MinimaxResult m = solve_minimax({0.5, 0.5});
    CHECK(m.r_star == doctest::Approx(0.74681892164608345992).epsilon(1e-11));
    CHECK(m.theta_star == kQuarterPi);
    CHECK(m.u == doctest::Approx(0.39605789702998401198).epsilon(1e-12));
    CHECK(m.r_star * std::cos(m.theta_star) ==
          doctest::Approx(0.52808072381437051761).epsilon(1e-11));

    const MinimaxResult m2 = solve_minimax({0.3, 0.7});
    CHECK(m2.r_star == doctest::Approx(0.92611380631357211).epsilon(1e-11));
    CHECK(m2.theta_star == doctest::Approx(0.13991152134595723).epsilon(1e-10));
    CHECK(m2.u == doctest::Approx(0.27872708252837854).epsilon(1e-12));
}

TEST_CASE("solve: dense-grid oracle agreement") {
    for (const PlanePoint pt : {PlanePoint{0.5, 0.5}, PlanePoint{0.3, 0.7},
                                PlanePoint{0.82, 0.37}}) {
        const double brute = grid_minimax(pt);
        CHECK(solve_minimax(pt).u == doctest::Approx(brute).epsilon(2e-7));
    }
}

TEST_CASE("solve: first-order conditions and saddle signs at random points") {
    SolverPolicy sp;
    for (unsigned long i = 1; i <= 40; ++i) {
        const PlanePoint p{0.03 + 0.94 * halton(i, 2), 0.03 + 0.94 * halton(i, 3)};
        const MinimaxResult m = solve_minimax(p);
        CHECK(m.residual_r < 10.0 * sp.root_tol);
        CHECK(m.residual_theta < 10.0 * sp.root_tol);
        CHECK(m.r_star > 0.0);
        CHECK(m.r_star <= 1.0);

        const WPartials wp = eval_W_partials({m.r_star, m.theta_star});
        CHECK(wp.W_rr > 0.0);  // maximum in r

        if (std::fabs(p.x - p.y) > 1e-3) {
            // h'' = (r')^2 W_rr stays nonnegative; difference r' against the
            // implicit-function expression
            const double d = 1e-5;
            const double rm = inner_max_radius(p, m.theta_star - d);
            const double rp = inner_max_radius(p, m.theta_star + d);
            const double r_prime_fd = (rp - rm) / (2 * d);
            const double r_prime =
                (-p.x * std::sin(m.theta_star) + p.y * std::cos(m.theta_star) -
                 wp.W_rtheta) / wp.W_rr;
            CHECK(r_prime == doctest::Approx(r_prime_fd).scale(1.0).epsilon(1e-4));
            CHECK(r_prime_fd * r_prime_fd * wp.W_rr >= 0.0);
        }
    }
}

TEST_CASE("solve: value symmetry under coordinate swap") {
    const MinimaxResult a = solve_minimax({0.25, 0.75});
    const MinimaxResult b = solve_minimax({0.75, 0.25});
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-13));
    CHECK(a.u == doctest::Approx(0.23767949718528049).epsilon(1e-12));
}

TEST_CASE("solve: gradient matches central differences of the value") {
    for (const PlanePoint p : {PlanePoint{0.3, 0.7}, PlanePoint{0.62, 0.21},
                               PlanePoint{0.15, 0.45}}) {
        const MinimaxResult m = solve_minimax(p);
        const double h = 1e-5;
        const double ux = (solve_minimax({p.x + h, p.y}).u -
                           solve_minimax({p.x - h, p.y}).u) / (2 * h);
        const double uy = (solve_minimax({p.x, p.y + h}).u -
                           solve_minimax({p.x, p.y - h}).u) / (2 * h);
        CHECK(std::fabs(ux - m.r_star * std::cos(m.theta_star)) < 1e-8);
        CHECK(std::fabs(uy - m.r_star * std::sin(m.theta_star)) < 1e-8);
    }
}

TEST_CASE("solve: value increases strictly along the diagonal") {
    double prev = -1.0;
    for (int k = 1; k <= 60; ++k) {
        const double x = 0.99 * k / 61.0;
        const double u = solve_minimax({x, x}).u;
        CHECK(u > prev);
        prev = u;
    }
}

TEST_CASE("solve: bounds squeeze and the corner limit") {
    for (unsigned long i = 1; i <= 60; ++i) {
        const PlanePoint p{0.02 + 0.96 * halton(i, 2), 0.02 + 0.96 * halton(i, 3)};
        const double u = solve_minimax(p).u;
        CHECK(u >= 1.0 - std::hypot(1.0 - p.x, 1.0 - p.y) - 1e-12);
        CHECK(u <= std::min(p.x, p.y) + 1e-12);
    }
    const MinimaxResult c = solve_minimax({1.0 - 1e-10, 1.0 - 1e-10});
    CHECK(c.corner_limit);
    CHECK(c.r_star == 1.0);
    CHECK(c.u == doctest::Approx(1.0 - kSqrt2 * 1e-10).epsilon(1e-13));
}

TEST_CASE("solve: rejects points outside the open quadrant") {
    CHECK_THROWS_AS((void)solve_minimax({0.0, 0.5}), DomainError);
    CHECK_THROWS_AS((void)solve_minimax({0.5, 1.0}), DomainError);
    CHECK_THROWS_AS((void)solve_minimax({-0.1, 0.5}), DomainError);
}
