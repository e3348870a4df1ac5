#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "infpot/sampling.hpp"
#include "infpot/series.hpp"

using namespace infpot;

namespace {

// independent reference summation: fixed-count naive loop, no snap logic,
// no incremental power bookkeeping
double naive_W(double r, double theta, int terms) {
    long double acc = 0.0L;
    for (int n = 1; n <= terms; ++n) {
        const long double m = 4.0L * n - 2.0L;
        acc += std::pow((long double)r, m * m) / ((m * m - 1.0L) * m) *
               std::sin(m * (long double)theta);
    }
    return static_cast<double>(8.0L / 3.141592653589793238462643383279502884L * acc);
}

PolarPoint interior_point(unsigned long i) {
    return {0.02 + 0.95 * halton(i, 2), 0.02 + (kHalfPi - 0.04) * halton(i, 3)};
}

}  // namespace

// reference values below were frozen from 40-digit arbitrary-precision
// summation of the defining series

TEST_CASE("frequency ladder: m = 4n-2, exponent m^2") {
    for (long n = 1; n <= 200; ++n) {
        const SeriesTerm t = series_term(n);
        CHECK(t.m % 4 == 2);
        CHECK(t.exponent == t.m * t.m);
        CHECK(t.m == 4 * n - 2);
    }
    CHECK_THROWS_AS((void)series_term(0), DomainError);
}

TEST_CASE("W: closed boundary row and vanishing edges") {
    for (double r : {0.0, 0.25, 0.747, 1.0})
        CHECK(eval_W({r, 0.0}) == 0.0);
    CHECK(eval_W({1.0, kQuarterPi}) == doctest::Approx(kSqrt2 - 1.0).epsilon(1e-14));
    CHECK(std::fabs(eval_W({0.6, kHalfPi})) < 1e-14);
    CHECK(eval_W({0.0, 1.0}) == 0.0);
}

TEST_CASE("W: interior values against the reference summation") {
    CHECK(eval_W({0.5, kQuarterPi}) ==
          doctest::Approx(0.026525823848472764781).epsilon(1e-14));
    CHECK(eval_W({0.25, 0.3}) ==
          doctest::Approx(0.00093610042417139456709).epsilon(1e-12));
    for (unsigned long i = 1; i <= 40; ++i) {
        const PolarPoint p = interior_point(i);
        CHECK(eval_W(p) == doctest::Approx(naive_W(p.r, p.theta, 60)).epsilon(1e-13));
    }
}

TEST_CASE("W partials: frozen references and boundary closed forms") {
    const WPartials wp = eval_W_partials({0.5, 0.7});
    CHECK(wp.W_r == doctest::Approx(0.20911892758390933305).epsilon(1e-13));
    CHECK(wp.W_theta == doctest::Approx(0.0090170369847409007658).epsilon(1e-12));
    CHECK(wp.W_rr == doctest::Approx(1.25471356479476226).epsilon(1e-13));
    CHECK(wp.W_rtheta == doctest::Approx(0.072136295844707224456).epsilon(1e-12));

    // the inner-max first-order condition at (x,y) = (0.5, 0.5)
    CHECK(eval_W_partials({0.747, kQuarterPi}).W_r ==
          doctest::Approx(0.70762113016015614238).epsilon(1e-13));
    CHECK(eval_W_partials({0.74681892164608346, kQuarterPi}).W_r ==
          doctest::Approx(kSqrt2 / 2.0).epsilon(1e-12));

    CHECK(eval_W_partials({1.0, kQuarterPi}).W_r ==
          doctest::Approx(kSqrt2).epsilon(1e-14));
    CHECK(eval_W_partials({1.0, 0.3}).W_r ==
          doctest::Approx(std::cos(0.3) + std::sin(0.3)).epsilon(1e-14));
    for (double r : {0.1, 0.6, 0.95})
        CHECK(std::fabs(eval_W_partials({r, kQuarterPi}).W_theta) < 1e-14);
}

TEST_CASE("W partials: finite differences confirm the termwise derivatives") {
    const double h = 1e-6;
    for (unsigned long i = 1; i <= 10; ++i) {
        PolarPoint p = interior_point(i);
        p.r = 0.05 + 0.8 * halton(i, 2);
        const WPartials wp = eval_W_partials(p);
        const double wr_fd =
            (eval_W({p.r + h, p.theta}) - eval_W({p.r - h, p.theta})) / (2 * h);
        const double wth_fd =
            (eval_W({p.r, p.theta + h}) - eval_W({p.r, p.theta - h})) / (2 * h);
        const double wrr_fd = (eval_W_partials({p.r + h, p.theta}).W_r -
                               eval_W_partials({p.r - h, p.theta}).W_r) /
                              (2 * h);
        const double wrth_fd = (eval_W_partials({p.r, p.theta + h}).W_r -
                                eval_W_partials({p.r, p.theta - h}).W_r) /
                               (2 * h);
        CHECK(wp.W_r == doctest::Approx(wr_fd).epsilon(1e-8));
        CHECK(wp.W_theta == doctest::Approx(wth_fd).scale(1.0).epsilon(1e-8));
        CHECK(wp.W_rr == doctest::Approx(wrr_fd).epsilon(1e-7));
        CHECK(wp.W_rtheta == doctest::Approx(wrth_fd).scale(1.0).epsilon(1e-7));
    }
}

TEST_CASE("U: edge values, boundary limit and frozen references") {
    CHECK(eval_U({0.0, 0.9}) == 0.0);
    CHECK(eval_U({0.6, 0.0}) == 0.0);
    CHECK(eval_U({1.0, kQuarterPi}) == 1.0);
    CHECK(eval_U({0.99, kQuarterPi}) ==
          doctest::Approx(0.99999993939466820248).epsilon(1e-13));
    CHECK(eval_U({0.99, kQuarterPi}) > 0.99);
    CHECK(eval_U({0.9, kQuarterPi}) ==
          doctest::Approx(0.82581787918310037255).epsilon(1e-13));
    CHECK(eval_U({0.5, 0.7}) ==
          doctest::Approx(0.078419597842735628819).epsilon(1e-13));
}

TEST_CASE("U_theta: diagonal zero, sign pattern, frozen reference") {
    for (double r : {0.1, 0.5, 0.9})
        CHECK(std::fabs(eval_U_theta({r, kQuarterPi})) < 1e-14);
    CHECK(eval_U_theta({0.5, 0.0}) ==
          doctest::Approx(0.15915494312895148361).epsilon(1e-13));
    for (unsigned long i = 1; i <= 300; ++i) {
        PolarPoint p = interior_point(i);
        p.r = 0.02 + 0.96 * p.r;
        if (std::fabs(p.theta - kQuarterPi) < 1e-6) continue;
        CHECK(eval_U_theta(p) * (kQuarterPi - p.theta) > 0.0);
    }
    CHECK_THROWS_AS((void)eval_U_theta({1.0, 0.3}), DomainError);
}

TEST_CASE("polar equation: r W_r cancels W_thetatheta termwise") {
    for (unsigned long i = 1; i <= 100; ++i) {
        const PolarPoint p = interior_point(i);
        CHECK(std::fabs(p.r * eval_W_partials(p).W_r + eval_W_theta_theta(p)) < 1e-10);
    }
}

TEST_CASE("positivity of W, W_r, W_rr on the open quadrant") {
    for (unsigned long i = 1; i <= 1000; ++i) {
        const PolarPoint p{halton(i, 2), kHalfPi * halton(i, 3)};
        if (p.r == 0.0 || p.theta == 0.0) continue;
        const WPartials wp = eval_W_partials(p);
        CHECK(eval_W(p) > 0.0);
        CHECK(wp.W_r > 0.0);
        CHECK(wp.W_rr > 0.0);
    }
}

TEST_CASE("theta2: trivial zeros and frozen references") {
    for (double q : {0.0, 0.2, 0.9})
        CHECK(std::fabs(eval_theta2(kHalfPi, q)) < 1e-14);
    CHECK(eval_theta2(0.0, 0.0) == 0.0);
    CHECK(eval_theta2(0.0, 0.0, Theta2Form::Product) == 0.0);
    CHECK(eval_theta2(0.3, 0.25) ==
          doctest::Approx(1.4060172781921948916).epsilon(1e-14));
    CHECK(eval_theta2(0.3, 0.25, Theta2Form::Product) ==
          doctest::Approx(1.4060172781921948916).epsilon(1e-14));
    CHECK(eval_theta2(0.0, 0.99) ==
          doctest::Approx(17.680097224417074423).epsilon(1e-13));
    CHECK_THROWS_AS((void)eval_theta2(0.1, 1.0), DomainError);
    CHECK_THROWS_AS((void)eval_theta2(0.1, -0.2), DomainError);
}

TEST_CASE("theta2: series and product forms agree across the nome range") {
    for (double q : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999})
        for (int iz = 0; iz <= 32; ++iz) {
            const double z = kPi * iz / 32.0;
            CHECK(std::fabs(eval_theta2(z, q, Theta2Form::Series) -
                            eval_theta2(z, q, Theta2Form::Product)) < 1e-12);
        }
}

TEST_CASE("U_theta is (4/pi) theta2(2 theta, r^16)") {
    for (unsigned long i = 1; i <= 200; ++i) {
        PolarPoint p = interior_point(i);
        p.r = 0.99 * halton(i, 2);
        const double lhs = eval_U_theta(p);
        const double rhs = 4.0 / kPi * eval_theta2(2.0 * p.theta, std::pow(p.r, 16.0));
        CHECK(std::fabs(lhs - rhs) < 1e-12);
    }
    CHECK(eval_U_theta({0.9, 0.1}) ==
          doctest::Approx(1.6848257467747824504).epsilon(1e-14));
    CHECK(4.0 / kPi * eval_theta2(0.2, std::pow(0.9, 16.0)) ==
          doctest::Approx(1.6848257467747824504).epsilon(1e-14));
}

TEST_CASE("U_r on the diagonal: series, product, and the r -> 1 limit") {
    CHECK(eval_Ur_diagonal(0.0) == 0.0);
    CHECK(eval_Ur_diagonal(0.9, {}, Theta2Form::Product) ==
          doctest::Approx(3.3310640146373891067).epsilon(1e-13));
    CHECK(eval_Ur_diagonal(0.99, {}, Theta2Form::Product) ==
          doctest::Approx(9.6335210035681712778e-5).epsilon(1e-10));
    for (double r : {0.1, 0.5, 0.9, 0.99, 0.9999})
        CHECK(std::fabs(eval_Ur_diagonal(r, {}, Theta2Form::Series) -
                        eval_Ur_diagonal(r, {}, Theta2Form::Product)) < 1e-10);
    CHECK(eval_Ur_diagonal(0.9999, {}, Theta2Form::Product) < 1e-3);
    CHECK_THROWS_AS((void)eval_Ur_diagonal(1.0), DomainError);
}

TEST_CASE("boundary Fourier row: W_theta(1,.) equals |cos| - |sin|") {
    // the series converges conditionally; long partial sums suffice away
    // from the corners
    for (int k = 1; k <= 7; ++k) {
        const double th = 0.15 + (kHalfPi - 0.3) * (k - 1) / 6.0;
        long double sum = 0.0L;
        for (long n = 1; n <= 200000; ++n) {
            const long double m = 4.0L * n - 2.0L;
            sum += std::cos(m * static_cast<long double>(th)) / (m * m - 1.0L);
        }
        const double series_val =
            static_cast<double>(8.0L / 3.141592653589793238462643383279502884L * sum);
        CHECK(std::fabs(series_val -
                        (std::fabs(std::cos(th)) - std::fabs(std::sin(th)))) < 1e-8);
    }
}

TEST_CASE("truncation: soundness under a tighter tolerance, loud failure past it") {
    SeriesPolicy tight;
    tight.abs_tol = 1e-18;
    for (unsigned long i = 1; i <= 50; ++i) {
        PolarPoint p = interior_point(i);
        p.r *= 0.999;
        CHECK(std::fabs(eval_W(p) - eval_W(p, tight)) < 1e-14);
    }
    // W itself converges right up to r = 1 (coefficients decay like m^-3),
    // so just below the snap radius it must match the boundary closed form
    CHECK(eval_W({1.0 - 1e-11, 0.7}) ==
          doctest::Approx(std::cos(0.7) + std::sin(0.7) - 1.0).epsilon(1e-10));
    // the derivative series carry no such decay; inside the band between the
    // resolvable ceiling and boundary_snap they must refuse loudly
    CHECK_THROWS_AS((void)eval_W_partials({1.0 - 1e-11, 0.7}), TruncationError);
    CHECK_THROWS_AS((void)eval_U_theta({1.0 - 1e-11, 0.7}), TruncationError);
    SeriesPolicy tiny;
    tiny.max_terms = 3;
    CHECK_THROWS_AS((void)eval_W({0.97, 0.7}, tiny), TruncationError);
}

TEST_CASE("domain and corner errors") {
    CHECK_THROWS_AS((void)eval_W({1.5, 0.3}), DomainError);
    CHECK_THROWS_AS((void)eval_W({0.5, -0.4}), DomainError);
    CHECK_THROWS_AS((void)eval_W({-0.5, 0.3}), DomainError);
    CHECK_THROWS_AS((void)eval_W_partials({1.0, 0.0}), CornerSingularityError);
    CHECK_THROWS_AS((void)eval_W_partials({1.0, kHalfPi}), CornerSingularityError);
    CHECK_THROWS_AS((void)eval_W_partials({1.0, 1e-7}), CornerSingularityError);
    CHECK_THROWS_AS((void)eval_W_theta_theta({1.0, 1e-7}), CornerSingularityError);
    CHECK_NOTHROW((void)eval_W_partials({1.0, 0.01}));
    // inside the corner band U and U_theta fall back to the series, which
    // must then fail loudly rather than guess
    CHECK_THROWS_AS((void)eval_U({1.0, 1e-7}), TruncationError);
    SeriesPolicy bad;
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS((void)eval_W({0.5, 0.5}, bad), DomainError);
}
