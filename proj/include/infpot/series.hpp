#pragma once

#include "infpot/types.hpp"

namespace infpot {

/// One rung of the frequency ladder every series here runs over.
struct SeriesTerm {
    long n = 1;         ///< term index, n >= 1
    long m = 2;         ///< frequency m = 4n - 2, always 2 mod 4
    long exponent = 4;  ///< power of r carried by the term, m^2
};

inline SeriesTerm series_term(long n) {
    if (n < 1) throw DomainError("series_term: index must be >= 1");
    const long m = 4 * n - 2;
    return {n, m, m * m};
}

/// Partial derivatives of W at one polar point, each summed termwise.
struct WPartials {
    double W_r = 0.0;
    double W_theta = 0.0;
    double W_rr = 0.0;
    double W_rtheta = 0.0;
};

enum class Theta2Form { Series, Product };

/// W(r,theta) = (8/pi) sum_n r^(m^2) sin(m theta) / ((m^2-1) m), m = 4n-2.
/// For r >= boundary_snap returns the closed boundary value
/// cos(theta) + sin(theta) - 1.
double eval_W(const PolarPoint& p, const SeriesPolicy& policy = {});

/// W_r, W_theta, W_rr and W_rtheta in one pass over the series.
/// Near r = 1 the closed forms W_r = cos+sin, W_theta = W_rtheta = cos-sin,
/// W_rr = 0 are used; inside the corner guard of (1,0) and (1,pi/2) the
/// radial derivatives jump and evaluation is refused.
WPartials eval_W_partials(const PolarPoint& p, const SeriesPolicy& policy = {});

/// W_thetatheta by its own termwise series (equals -r W_r analytically).
double eval_W_theta_theta(const PolarPoint& p, const SeriesPolicy& policy = {});

/// U(r,theta) = r W_r - W = (8/pi) sum_n r^(m^2) sin(m theta) / m.
double eval_U(const PolarPoint& p, const SeriesPolicy& policy = {});

/// U_theta(r,theta) = (8/pi) sum_n r^(m^2) cos(m theta); requires r < 1.
double eval_U_theta(const PolarPoint& p, const SeriesPolicy& policy = {});

/// Jacobi theta_2(z,q), 0 <= q < 1, by truncated series or truncated product.
double eval_theta2(double z, double q, Theta2Form form = Theta2Form::Series,
                   const SeriesPolicy& policy = {});

/// U_r(r,pi/4) = r W_rr(r,pi/4), either as the alternating series
/// (8/pi)(2r^3 - 6r^35 + 10r^99 - ...) or as the product
/// (16/pi) r^3 prod_k (1 - r^32k)^3; requires 0 <= r < 1.
double eval_Ur_diagonal(double r, const SeriesPolicy& policy = {},
                        Theta2Form form = Theta2Form::Product);

}  // namespace infpot
