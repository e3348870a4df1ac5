#pragma once

#include <vector>

#include "infpot/types.hpp"

namespace infpot {

/// Uniform grid over [0,2]^2 for the monotone discrete solver.
struct GridSpec {
    int n = 101;              ///< nodes per side; odd so the centre is a node
    int stencil_radius = 3;   ///< neighbourhood radius in grid cells
    double sweep_tol = 1e-10; ///< max nodal update that counts as converged
    long max_sweeps = 1000000;

    void validate() const {
        if (n < 17 || (n % 2) == 0)
            throw DomainError("GridSpec: n must be odd and at least 17");
        if (stencil_radius < 1)
            throw DomainError("GridSpec: stencil_radius must be >= 1");
        if (!(sweep_tol > 0.0) || max_sweeps < 1)
            throw DomainError("GridSpec: sweep_tol and max_sweeps must be positive");
    }
    double spacing() const { return 2.0 / (n - 1); }
    double coord(int i) const { return i * spacing(); }
};

enum class FdInit { LowerBound, Ones };

struct DiscreteSolution {
    int n = 0;
    std::vector<double> values;   ///< row-major, index i*n + j for (x_i, y_j)
    long sweeps = 0;
    double final_residual = 0.0;  ///< order-independent (Jacobi) residual
    double max_increase = 0.0;    ///< largest single-node increase ever applied
    double min_seen = 0.0;        ///< extremes over all sweeps, for the maximum
    double max_seen = 0.0;        ///< principle check

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
};

/// Gauss-Seidel iteration of the midpoint update u_i <- (max + min)/2 over the
/// discrete ball, boundary pinned to 0 and the centre node to 1. Convergence
/// is declared on the Jacobi residual, which no sweep ordering can bias.
DiscreteSolution solve_discrete(const GridSpec& spec, FdInit init = FdInit::LowerBound);

struct OracleReport {
    GridSpec spec;
    double sup_gap = 0.0;
    double l2_gap = 0.0;           ///< root-mean-square gap
    std::vector<double> gaps;      ///< signed discrete - analytic, row-major
    std::vector<double> discrete;  ///< the converged grid itself, row-major
    long sweeps = 0;
    double final_residual = 0.0;
};

/// Runs the discrete solve and compares it with the analytic potential at
/// every node.
OracleReport compare_fields(const GridSpec& spec, const SolverPolicy& solver = {},
                            const SeriesPolicy& series = {});

}  // namespace infpot
