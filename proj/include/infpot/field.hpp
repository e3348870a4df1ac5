#pragma once

#include <array>
#include <optional>

#include "infpot/minimax.hpp"
#include "infpot/types.hpp"

namespace infpot {

/// Where a point sits after reflection into the fundamental quadrant.
/// Points closer than 1e-6 to a seam are tagged with the seam (the Hessian
/// is ill-conditioned there); value dispatch onto the seam closed forms
/// only happens within 1e-12.
enum class RegionTag { InteriorOffDiagonal, Diagonal, Median, Boundary, Center };

const char* to_string(RegionTag tag);

struct Hessian2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

struct FieldSample {
    PlanePoint point;
    double u = 0.0;
    std::array<double, 2> grad{};            ///< NaN at the centre and outer corners
    std::optional<Hessian2> hessian;         ///< present iff InteriorOffDiagonal
    RegionTag region = RegionTag::Boundary;
};

/// Value and gradient magnitude on the diagonal at arc length s in [0, sqrt2].
struct DiagonalValue {
    double u = 0.0;
    double g = 0.0;
};

/// Potential over the full square [0,2]^2, glued by reflection.
double eval_u(const PlanePoint& p, const SolverPolicy& solver = {},
              const SeriesPolicy& series = {});

/// Gradient over [0,2]^2 minus the centre; closed forms on medians, edges and
/// the diagonals, reflection sign flips elsewhere.
std::array<double, 2> eval_grad(const PlanePoint& p, const SolverPolicy& solver = {},
                                const SeriesPolicy& series = {});

/// Hessian of u at an interior point away from diagonals, medians and centre.
Hessian2 eval_hessian(const PlanePoint& p, const SolverPolicy& solver = {},
                      const SeriesPolicy& series = {});

/// u(s 1) = s g(s) - W(g(s), pi/4) with g the inverse of r -> W_r(r, pi/4).
DiagonalValue diagonal_value(double s, const SolverPolicy& solver = {},
                             const SeriesPolicy& series = {});

/// Second derivative of t -> u(x0 + t 1perp) at the given nonzero offset from
/// the diagonal base point s 1, by the closed form at the offset's minimax.
double diagonal_transverse_second_derivative(double s, double offset,
                                             const SolverPolicy& solver = {},
                                             const SeriesPolicy& series = {});

/// One-stop record for grid export.
FieldSample sample_field(const PlanePoint& p, const SolverPolicy& solver = {},
                         const SeriesPolicy& series = {});

}  // namespace infpot
