"""Explicit infinity-potential of the punctured square.

Value, gradient and Hessian fields of the capacitary function u with u = 0 on
the sides of [0,2]^2 and u = 1 at the centre, evaluated from its minimax
representation, plus the verification suites and a monotone finite-difference
cross-check.
"""

from ._core import (
    BracketError,
    ConvergenceError,
    CornerSingularityError,
    DisproofReport,
    DomainError,
    MinimaxResult,
    SeriesPolicy,
    SingularHessianError,
    SolverPolicy,
    TruncationError,
    UndefinedValueError,
    aronsson_approximation,
    diagonal_excess,
    diagonal_value,
    eval_U,
    eval_U_theta,
    eval_W,
    eval_W_partials,
    eval_grad,
    eval_hessian,
    eval_u,
    fd_compare,
    ground_state_disproof,
    solve_minimax,
    theta2,
    theta_integral_u,
    transverse_second_derivative,
    ur_diagonal,
    verify,
)

__all__ = [
    "BracketError",
    "ConvergenceError",
    "CornerSingularityError",
    "DisproofReport",
    "DomainError",
    "MinimaxResult",
    "SeriesPolicy",
    "SingularHessianError",
    "SolverPolicy",
    "TruncationError",
    "UndefinedValueError",
    "aronsson_approximation",
    "diagonal_excess",
    "diagonal_value",
    "eval_U",
    "eval_U_theta",
    "eval_W",
    "eval_W_partials",
    "eval_grad",
    "eval_hessian",
    "eval_u",
    "fd_compare",
    "ground_state_disproof",
    "solve_minimax",
    "theta2",
    "theta_integral_u",
    "transverse_second_derivative",
    "ur_diagonal",
    "verify",
]

__version__ = "0.1.0"
