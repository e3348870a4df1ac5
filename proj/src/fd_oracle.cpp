#include "infpot/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "infpot/field.hpp"
#include "infpot/parallel.hpp"

namespace infpot {

namespace {

struct Stencil {
    std::vector<std::pair<int, int>> offsets;
    explicit Stencil(int radius) {
        for (int di = -radius; di <= radius; ++di)
            for (int dj = -radius; dj <= radius; ++dj)
                if (di != 0 || dj != 0)
                    if (di * di + dj * dj <= radius * radius)
                        offsets.emplace_back(di, dj);
    }
};

double midpoint_update(const DiscreteSolution& sol, const Stencil& st, int i, int j) {
    const int n = sol.n;
    double hi = -1.0, lo = 2.0;
    for (const auto& [di, dj] : st.offsets) {
        const int a = i + di, b = j + dj;
        if (a < 0 || a >= n || b < 0 || b >= n) continue;  // clipped at edges
        const double v = sol.at(a, b);
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    return 0.5 * (hi + lo);
}

bool pinned(int i, int j, int n, int ic) {
    return i == 0 || j == 0 || i == n - 1 || j == n - 1 || (i == ic && j == ic);
}

double jacobi_residual(const DiscreteSolution& sol, const Stencil& st, int ic) {
    const int n = sol.n;
    double res = 0.0;
    for (int i = 1; i < n - 1; ++i)
        for (int j = 1; j < n - 1; ++j) {
            if (i == ic && j == ic) continue;
            res = std::max(res, std::fabs(midpoint_update(sol, st, i, j) - sol.at(i, j)));
        }
    return res;
}

}  // namespace

DiscreteSolution solve_discrete(const GridSpec& spec, FdInit init) {
    spec.validate();
    const int n = spec.n;
    const int ic = (n - 1) / 2;
    const Stencil st(spec.stencil_radius);

    DiscreteSolution sol;
    sol.n = n;
    sol.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (pinned(i, j, n, ic)) {
                sol.values[static_cast<std::size_t>(i) * n + j] =
                    (i == ic && j == ic) ? 1.0 : 0.0;
            } else if (init == FdInit::Ones) {
                sol.values[static_cast<std::size_t>(i) * n + j] = 1.0;
            } else {
                const double dx = spec.coord(i) - 1.0, dy = spec.coord(j) - 1.0;
                sol.values[static_cast<std::size_t>(i) * n + j] =
                    std::clamp(1.0 - std::hypot(dx, dy), 0.0, 1.0);
            }
        }
    sol.min_seen = 0.0;
    sol.max_seen = 1.0;

    // four sweep orders cycle so information travels in every direction
    const auto run_sweep = [&](int mode) {
        double delta = 0.0;
        const int i0 = (mode & 1) ? n - 2 : 1;
        const int i1 = (mode & 1) ? 0 : n - 1;
        const int is = (mode & 1) ? -1 : 1;
        const int j0 = (mode & 2) ? n - 2 : 1;
        const int j1 = (mode & 2) ? 0 : n - 1;
        const int js = (mode & 2) ? -1 : 1;
        for (int i = i0; i != i1; i += is)
            for (int j = j0; j != j1; j += js) {
                if (i == ic && j == ic) continue;
                const double now = sol.at(i, j);
                const double nxt = midpoint_update(sol, st, i, j);
                sol.values[static_cast<std::size_t>(i) * n + j] = nxt;
                delta = std::max(delta, std::fabs(nxt - now));
                sol.max_increase = std::max(sol.max_increase, nxt - now);
                sol.min_seen = std::min(sol.min_seen, nxt);
                sol.max_seen = std::max(sol.max_seen, nxt);
            }
        return delta;
    };

    for (long sweep = 0; sweep < spec.max_sweeps; ++sweep) {
        const double delta = run_sweep(static_cast<int>(sweep % 4));
        ++sol.sweeps;
        if (delta < spec.sweep_tol) {
            sol.final_residual = jacobi_residual(sol, st, ic);
            if (sol.final_residual < spec.sweep_tol) return sol;
        }
    }
    throw ConvergenceError("solve_discrete: not converged within max_sweeps");
}

OracleReport compare_fields(const GridSpec& spec, const SolverPolicy& solver,
                            const SeriesPolicy& series) {
    OracleReport rep;
    rep.spec = spec;
    DiscreteSolution sol = solve_discrete(spec);
    rep.sweeps = sol.sweeps;
    rep.final_residual = sol.final_residual;
    rep.discrete = sol.values;

    const int n = spec.n;
    rep.gaps.assign(sol.values.size(), 0.0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int i = static_cast<int>(row);
        for (int j = 0; j < n; ++j) {
            const double exact = eval_u({spec.coord(i), spec.coord(j)}, solver, series);
            rep.gaps[row * n + j] = sol.at(i, j) - exact;
        }
    });

    double sup = 0.0, sum2 = 0.0;
    for (const double g : rep.gaps) {
        sup = std::max(sup, std::fabs(g));
        sum2 += g * g;
    }
    rep.sup_gap = sup;
    rep.l2_gap = std::sqrt(sum2 / static_cast<double>(rep.gaps.size()));
    return rep;
}

}  // namespace infpot
