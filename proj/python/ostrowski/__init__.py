from ._core import (
    ConvergenceError,
    DomainError,
    Error,
    FunctionSpec,
    NondifferentiableError,
    ParseError,
    PreconditionError,
    bound_ids,
    check,
    consistency,
    integrate,
    kink_points,
    mean,
    parse,
    sup_abs_derivative,
    sup_ratio,
    verify,
    weight_median,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "Error",
    "FunctionSpec",
    "NondifferentiableError",
    "ParseError",
    "PreconditionError",
    "bound_ids",
    "check",
    "consistency",
    "integrate",
    "kink_points",
    "mean",
    "parse",
    "sup_abs_derivative",
    "sup_ratio",
    "verify",
    "weight_median",
]
