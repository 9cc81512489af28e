"""Reference 3x3 families used in the docs, tests and bundled problem files."""

from __future__ import annotations

from fractions import Fraction as F

from .core import Interval, ParametricLinearSystem, ParametricMatrix, mat_vec

_SUB = ((0, 0, 0), (1, 0, 0), (0, 1, 0))
_SUPER = ((0, 1, 0), (0, 0, 1), (0, 0, 0))


def oneparam() -> ParametricMatrix:
    """[[1+p1, p3, -1], [p2, 1+p1, p3], [-1, p2, p1/3]], p1 in [-3/4, 3/4], p2, p3 in [-1/2, 1/2].

    Regular, but the global spectral-radius test fails on it.
    """
    return ParametricMatrix(
        ((1, 0, -1), (0, 1, 0), (-1, 0, 0)),
        (((1, 0, 0), (0, 1, 0), (0, 0, F(1, 3))), _SUB, _SUPER),
        (Interval(F(-3, 4), F(3, 4)), Interval(F(-1, 2), F(1, 2)), Interval(F(-1, 2), F(1, 2))),
    )


def hudak() -> ParametricMatrix:
    """Parametric Hudak matrix [[p1, -43, 49], [-31, p1, -35], [25, -35, p2]], p1 in [31, 41], p2 in [28, 38]."""
    return ParametricMatrix(
        ((0, -43, 49), (-31, 0, -35), (25, -35, 0)),
        (((1, 0, 0), (0, 1, 0), (0, 0, 0)), ((0, 0, 0), (0, 0, 0), (0, 0, 1))),
        (Interval(31, 41), Interval(28, 38)),
    )


def rednumb() -> ParametricMatrix:
    """[[6/5+p1, p3, -1], [2+p2, 6/5+p1, p3], [-1, 2+p2, p1/3]], all p_i in [-1, 1]. Singular."""
    return ParametricMatrix(
        ((F(6, 5), 0, -1), (2, F(6, 5), 0), (-1, 2, 0)),
        (((1, 0, 0), (0, 1, 0), (0, 0, F(1, 3))), _SUB, _SUPER),
        (Interval(-1, 1), Interval(-1, 1), Interval(-1, 1)),
    )


def nilpotent(sub=0) -> ParametricMatrix:
    """I + p*[[0, 1], [sub, 0]], p in [-1, 1]; infinite regularity radius when sub <= 0."""
    return ParametricMatrix(((1, 0), (0, 1)), (((0, 1), (F(sub), 0)),), (Interval(-1, 1),))


def consistent_system(pm: ParametricMatrix, x) -> ParametricLinearSystem:
    """b(p) = A(p) x for a fixed x, so the solution set is the single point x."""
    return ParametricLinearSystem(pm, mat_vec(pm.A0, x), tuple(mat_vec(a, x) for a in pm.A))


def unit_rhs_system(pm: ParametricMatrix) -> ParametricLinearSystem:
    """Constant right-hand side e_1."""
    n = pm.n
    b0 = tuple(F(int(i == 0)) for i in range(n))
    return ParametricLinearSystem(pm, b0, tuple(tuple(F(0) for _ in range(n)) for _ in range(pm.K)))
