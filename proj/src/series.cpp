#include "infpot/series.hpp"

#include <cmath>
#include <string>

namespace infpot {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEight = 8.0L;

// tolerate a few ulp of slop at the domain edges, reject anything further out
constexpr double kEdgeSlop = 1e-12;

struct Clamped {
    long double r;
    long double theta;
};

Clamped validate_polar(const PolarPoint& p, const char* who) {
    if (!(std::isfinite(p.r) && std::isfinite(p.theta)))
        throw DomainError(std::string(who) + ": non-finite input");
    if (p.r < -kEdgeSlop || p.r > 1.0 + kEdgeSlop)
        throw DomainError(std::string(who) + ": r outside [0,1]");
    if (p.theta < -kEdgeSlop || p.theta > kHalfPi + kEdgeSlop)
        throw DomainError(std::string(who) + ": theta outside [0,pi/2]");
    Clamped c;
    c.r = std::min(std::max<long double>(p.r, 0.0L), 1.0L);
    c.theta = std::min(std::max<long double>(p.theta, 0.0L),
                       static_cast<long double>(kHalfPi));
    return c;
}

[[noreturn]] void truncation_failure(const char* who, const Clamped& c, long n) {
    throw TruncationError(std::string(who) + ": series not resolved after " +
                          std::to_string(n) + " terms at r=" +
                          std::to_string(static_cast<double>(c.r)) + ", theta=" +
                          std::to_string(static_cast<double>(c.theta)));
}

bool in_corner_guard(const Clamped& c, const SeriesPolicy& policy) {
    const long double edge = std::min(c.theta, static_cast<long double>(kHalfPi) - c.theta);
    return edge < static_cast<long double>(policy.corner_guard());
}

// Walks m = 2, 6, 10, ...; maintains r^(m^2) through the increment
// m_{n+1}^2 - m_n^2 = 32 n.
struct PowerTrack {
    long double rm2;   // r^(m^2)
    long double q;     // r^(32 n)
    long double r32;
    explicit PowerTrack(long double r)
        : rm2(r * r * r * r), q(1.0L), r32(1.0L) {
        const long double r8 = (r * r) * (r * r) * ((r * r) * (r * r));
        r32 = r8 * r8 * (r8 * r8);
        q = r32;
    }
    void advance() {
        rm2 *= q;
        q *= r32;
    }
};

}  // namespace

double eval_W(const PolarPoint& p, const SeriesPolicy& policy) {
    policy.validate();
    const Clamped c = validate_polar(p, "eval_W");
    if (c.theta == 0.0L) return 0.0;  // every sin(m*0) vanishes
    if (c.r >= policy.boundary_snap)
        return static_cast<double>(std::cos(c.theta) + std::sin(c.theta) - 1.0L);
    if (c.r == 0.0L) return 0.0;

    long double acc = 0.0L;
    PowerTrack pw(c.r);
    const long double tol = policy.abs_tol;
    long m = 2;
    for (long n = 1;; ++n, m += 4) {
        const long double coeff = kEight / kPiL * pw.rm2 /
                                  (static_cast<long double>(m) * m - 1.0L) / m;
        if (coeff < tol) break;
        if (n > policy.max_terms) truncation_failure("eval_W", c, n);
        acc += coeff * std::sin(m * c.theta);
        pw.advance();
    }
    return static_cast<double>(acc);
}

WPartials eval_W_partials(const PolarPoint& p, const SeriesPolicy& policy) {
    policy.validate();
    const Clamped c = validate_polar(p, "eval_W_partials");
    if (c.r == 0.0L) return {};
    if (c.r >= policy.boundary_snap) {
        if (in_corner_guard(c, policy))
            throw CornerSingularityError(
                "eval_W_partials: W_r and W_rr jump at (1,0) and (1,pi/2)");
        const long double cs = std::cos(c.theta), sn = std::sin(c.theta);
        return {static_cast<double>(cs + sn), static_cast<double>(cs - sn), 0.0,
                static_cast<double>(cs - sn)};
    }

    long double wr = 0.0L, wth = 0.0L, wrr = 0.0L, wrth = 0.0L;
    PowerTrack pw(c.r);
    const long double inv_r = 1.0L / c.r;
    const long double tol = policy.abs_tol;
    long m = 2;
    for (long n = 1;; ++n, m += 4) {
        const long double md = static_cast<long double>(m);
        const long double rm1 = pw.rm2 * inv_r;        // r^(m^2-1)
        const long double rm0 = rm1 * inv_r;           // r^(m^2-2)
        // W_rr carries the slowest-decaying bound of the four
        const long double bound = kEight / kPiL * md * rm0;
        if (bound < tol) break;
        if (n > policy.max_terms) truncation_failure("eval_W_partials", c, n);
        const long double sn = std::sin(md * c.theta);
        const long double cs = std::cos(md * c.theta);
        const long double m2m1 = md * md - 1.0L;
        wr += md / m2m1 * rm1 * sn;
        wth += pw.rm2 / m2m1 * cs;
        wrr += md * rm0 * sn;
        wrth += md * md / m2m1 * rm1 * cs;
        pw.advance();
    }
    const long double f = kEight / kPiL;
    return {static_cast<double>(f * wr), static_cast<double>(f * wth),
            static_cast<double>(f * wrr), static_cast<double>(f * wrth)};
}

double eval_W_theta_theta(const PolarPoint& p, const SeriesPolicy& policy) {
    policy.validate();
    const Clamped c = validate_polar(p, "eval_W_theta_theta");
    if (c.theta == 0.0L) return 0.0;
    if (c.r == 0.0L) return 0.0;
    if (c.r >= policy.boundary_snap) {
        if (in_corner_guard(c, policy))
            throw CornerSingularityError(
                "eval_W_theta_theta: discontinuous at (1,0) and (1,pi/2)");
        return static_cast<double>(-(std::cos(c.theta) + std::sin(c.theta)));
    }
    long double acc = 0.0L;
    PowerTrack pw(c.r);
    const long double tol = policy.abs_tol;
    long m = 2;
    for (long n = 1;; ++n, m += 4) {
        const long double md = static_cast<long double>(m);
        const long double coeff = kEight / kPiL * md / (md * md - 1.0L) * pw.rm2;
        if (coeff < tol) break;
        if (n > policy.max_terms) truncation_failure("eval_W_theta_theta", c, n);
        acc -= coeff * std::sin(md * c.theta);
        pw.advance();
    }
    return static_cast<double>(acc);
}

double eval_U(const PolarPoint& p, const SeriesPolicy& policy) {
    policy.validate();
    const Clamped c = validate_polar(p, "eval_U");
    if (c.theta == 0.0L) return 0.0;
    if (c.r == 0.0L) return 0.0;
    if (c.r >= policy.boundary_snap && !in_corner_guard(c, policy))
        return 1.0;  // initial temperature of the caloric picture

    long double acc = 0.0L;
    PowerTrack pw(c.r);
    const long double tol = policy.abs_tol;
    long m = 2;
    for (long n = 1;; ++n, m += 4) {
        const long double coeff = kEight / kPiL * pw.rm2 / m;
        if (coeff < tol) break;
        if (n > policy.max_terms) truncation_failure("eval_U", c, n);
        acc += coeff * std::sin(m * c.theta);
        pw.advance();
    }
    return static_cast<double>(acc);
}

double eval_U_theta(const PolarPoint& p, const SeriesPolicy& policy) {
    policy.validate();
    if (p.r >= 1.0)
        throw DomainError("eval_U_theta: requires r < 1");
    const Clamped c = validate_polar(p, "eval_U_theta");
    if (c.r == 0.0L) return 0.0;
    if (c.r >= policy.boundary_snap && !in_corner_guard(c, policy))
        return 0.0;  // theta_2(2theta, r^16) -> 0 for interior theta

    long double acc = 0.0L;
    PowerTrack pw(c.r);
    const long double tol = policy.abs_tol;
    long m = 2;
    for (long n = 1;; ++n, m += 4) {
        const long double coeff = kEight / kPiL * pw.rm2;
        if (coeff < tol) break;
        if (n > policy.max_terms) truncation_failure("eval_U_theta", c, n);
        acc += coeff * std::cos(m * c.theta);
        pw.advance();
    }
    return static_cast<double>(acc);
}

double eval_theta2(double z, double q, Theta2Form form, const SeriesPolicy& policy) {
    policy.validate();
    if (!(q >= 0.0 && q < 1.0) || !std::isfinite(z))
        throw DomainError("eval_theta2: requires 0 <= q < 1 and finite z");
    const long double zl = z, ql = q;
    const long double tol = policy.abs_tol;

    if (form == Theta2Form::Series) {
        // 2 sum_k q^((k-1/2)^2) cos((2k-1) z); exponent increments by 2k
        long double acc = 0.0L;
        long double pw = std::pow(ql, 0.25L);  // q^((1-1/2)^2)
        long double qq = ql * ql;
        long double step = qq;                 // q^(2k) at k=1
        for (long k = 1;; ++k) {
            if (2.0L * pw < tol) break;
            if (k > policy.max_terms) {
                Clamped c{q, 0.0L};
                truncation_failure("eval_theta2", c, k);
            }
            acc += 2.0L * pw * std::cos((2 * k - 1) * zl);
            pw *= step;
            step *= qq;
        }
        return static_cast<double>(acc);
    }

    // 2 q^(1/4) cos z prod_k (1-q^2k)(1 + 2 q^2k cos 2z + q^4k)
    if (q == 0.0) return 0.0;
    long double prod = 1.0L;
    const long double qq = ql * ql;
    const long double c2z = std::cos(2.0L * zl);
    long double q2k = qq;
    const long double tail = 5.0L / (1.0L - qq);  // geometric bound on what remains
    for (long k = 1;; ++k) {
        if (q2k * tail < tol) break;
        if (prod == 0.0L) break;  // underflowed; later factors cannot revive it
        if (k > policy.max_terms) {
            Clamped c{q, 0.0L};
            truncation_failure("eval_theta2", c, k);
        }
        prod *= (1.0L - q2k) * (1.0L + 2.0L * q2k * c2z + q2k * q2k);
        q2k *= qq;
    }
    return static_cast<double>(2.0L * std::pow(ql, 0.25L) * std::cos(zl) * prod);
}

double eval_Ur_diagonal(double r, const SeriesPolicy& policy, Theta2Form form) {
    policy.validate();
    if (!(r >= 0.0 && r < 1.0))
        throw DomainError("eval_Ur_diagonal: requires 0 <= r < 1");
    if (r == 0.0) return 0.0;
    const long double rl = r;
    const long double tol = policy.abs_tol;

    if (form == Theta2Form::Series) {
        // (8/pi)(2 r^3 - 6 r^35 + 10 r^99 - ...), sign from sin(m pi/4)
        long double acc = 0.0L;
        PowerTrack pw(rl);
        const long double inv_r2 = 1.0L / (rl * rl);
        long double sign = 1.0L;
        long m = 2;
        for (long n = 1;; ++n, m += 4) {
            const long double term = kEight / kPiL * m * pw.rm2 * inv_r2;
            if (term < tol) break;
            if (n > policy.max_terms) {
                Clamped c{r, kQuarterPi};
                truncation_failure("eval_Ur_diagonal", c, n);
            }
            acc += sign * term;
            sign = -sign;
            pw.advance();
        }
        return static_cast<double>(rl * acc);  // r * W_rr
    }

    // (16/pi) r^3 prod_k (1 - r^32k)^3
    long double prod = 1.0L;
    const long double r32 = std::pow(rl, 32.0L);
    long double r32k = r32;
    const long double tail = 1.0L / (1.0L - r32);
    for (long k = 1;; ++k) {
        if (r32k * tail < tol) break;
        if (prod == 0.0L) break;  // underflowed; the factors only shrink it
        if (k > policy.max_terms) {
            Clamped c{r, kQuarterPi};
            truncation_failure("eval_Ur_diagonal", c, k);
        }
        prod *= (1.0L - r32k);
        r32k *= r32;
    }
    return static_cast<double>(16.0L / kPiL * rl * rl * rl * prod * prod * prod);
}

}  // namespace infpot
