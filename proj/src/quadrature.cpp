#include "infpot/quadrature.hpp"

#include <array>
#include <cmath>

namespace infpot {

namespace {

// 15-point Kronrod nodes on [-1,1] with the embedded 7-point Gauss rule
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double integral;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b, int& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double ik = 0.0, ig = 0.0;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        ik += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) ig += kWg[j / 2] * (f1 + f2);
        evals += 2;
    }
    const double fc = f(mid);
    ++evals;
    ik += kWgk[7] * fc;
    ig += kWg[3] * fc;
    return {ik * half, std::fabs(ik - ig) * half};
}

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, int max_depth, double& total, double& err, int& evals) {
    const Panel p = gk15(f, a, b, evals);
    if (p.error <= tol || depth >= max_depth) {
        if (depth >= max_depth && p.error > tol)
            throw ConvergenceError("integrate_gk: max recursion depth reached");
        total += p.integral;
        err += p.error;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, total, err, evals);
    refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, total, err, evals);
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) throw DomainError("integrate_gk: abs_tol must be positive");
    QuadResult out;
    if (a == b) return out;
    refine(f, a, b, abs_tol, 0, max_depth, out.value, out.error_estimate,
           out.evaluations);
    return out;
}

}  // namespace infpot
