"""Regularity radius: the smallest scaling of the centered parameter box that
admits a singular matrix."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import Interval, Matrix, ParametricMatrix, lin_comb
from .exactla import det_exact, det_pencil
from .realroots import DEFAULT_TOL, RealRoot, isolate_roots, root_bound
from .regularity import Rho0Result, SliceRho, _normalized, max_rho0


class RadiusKind(str, Enum):
    FINITE = "Finite"
    INFINITE = "Infinite"
    ZERO = "Zero"


@dataclass(frozen=True)
class RadiusWitness:
    """A singular matrix on the boundary of the scaled box.

    ``scale`` is the exact root r of det(A(c + r*d)) along the achieving
    direction d; ``params`` (user coordinates) are taken at its midpoint.
    """

    slice: SliceRho
    scale: RealRoot | None
    params: tuple
    params_lo: tuple
    params_hi: tuple
    matrix: Matrix
    validated: bool


@dataclass(frozen=True)
class RadiusResult:
    kind: RadiusKind
    value: RealRoot | None = None
    rho0: Rho0Result | None = None
    witness: RadiusWitness | None = None
    center_witness: tuple | None = None

    @property
    def certified(self) -> bool:
        return self.rho0 is None or self.rho0.certified

    @property
    def bracket(self) -> Interval | None:
        return self.value.bracket if self.value is not None else None


def _radius_witness(pm: ParametricMatrix, best: SliceRho, rstar: RealRoot, tol) -> RadiusWitness:
    key = best.key
    t = best.t if best.t is not None else Fraction(0)
    # the eigenvalue sign*rho of C^-1 * sum d_i A_i makes det(C + r * (-sign) * sum d_i A_i) vanish at r = 1/rho
    s = -best.sign
    direction = [s * x for x in key.full_vector(pm.radii, [t])]
    D = lin_comb(tuple(tuple(Fraction(0) for _ in row) for row in pm.A0), direction, pm.A)
    g = det_pencil(pm.A0, D)
    scale = None
    if g.degree > 0:
        roots = isolate_roots(g, Interval(0, root_bound(g)), tol).values
        if roots:
            target = rstar.mid
            scale = min(roots, key=lambda r: abs(r.mid - target))
    if scale is None:
        mid = pm.to_original([rstar.mid * x for x in direction])
        return RadiusWitness(best, None, mid, mid, mid, lin_comb(pm.A0, [rstar.mid * x for x in direction], pm.A), False)
    close = abs(scale.mid - rstar.mid) <= max(Fraction(1, 10**6), 100 * Fraction(tol))
    sign_ok = scale.is_exact or g.sign_at(scale.lo) * g.sign_at(scale.hi) < 0
    at = lambda r: pm.to_original([r * x for x in direction])  # noqa: E731
    mid_vec = [scale.mid * x for x in direction]
    return RadiusWitness(
        best, scale, at(scale.mid), at(scale.lo), at(scale.hi), lin_comb(pm.A0, mid_vec, pm.A), bool(close and sign_ok)
    )


def regularity_radius(pm: ParametricMatrix, tol=DEFAULT_TOL, workers: int = 1) -> RadiusResult:
    """r* = 1 / max rho0 over the slice pencils; Zero for a singular center, Infinite when max rho0 = 0."""
    pm = _normalized(pm)
    if det_exact(pm.A0) == 0:
        return RadiusResult(RadiusKind.ZERO, RealRoot.from_fraction(0), center_witness=pm.to_original([0] * pm.K))
    rho = max_rho0(pm, tol, workers)
    if rho.max.compare(0) == 0:
        return RadiusResult(RadiusKind.INFINITE, None, rho)
    value = rho.max.reciprocal()
    return RadiusResult(RadiusKind.FINITE, value, rho, _radius_witness(pm, rho.argmax, value, tol))


def check_infinite_radius(pm: ParametricMatrix, tol=DEFAULT_TOL) -> bool:
    pm = _normalized(pm)
    if det_exact(pm.A0) == 0:
        return False
    return max_rho0(pm, tol).max.compare(0) == 0
