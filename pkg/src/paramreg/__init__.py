"""Exact regularity checks, solution hulls and regularity radii for interval
parametric matrices A(p) = A0 + sum_k p_k A_k with p in a box."""

from .core import Interval, ParametricLinearSystem, ParametricMatrix, SubproblemKey, evaluate, normalize
from .hull import HullResult, solve_hull
from .radius import RadiusKind, RadiusResult, check_infinite_radius, regularity_radius
from .regularity import (
    CenterSingular,
    Status,
    check_regularity,
    check_regularity_reduced_sufficient,
    max_rho0,
    sufficient_condition_rho,
)

__version__ = "0.1.0"

__all__ = [
    "CenterSingular",
    "HullResult",
    "Interval",
    "ParametricLinearSystem",
    "ParametricMatrix",
    "RadiusKind",
    "RadiusResult",
    "Status",
    "SubproblemKey",
    "check_infinite_radius",
    "check_regularity",
    "check_regularity_reduced_sufficient",
    "evaluate",
    "max_rho0",
    "normalize",
    "regularity_radius",
    "solve_hull",
    "sufficient_condition_rho",
]
