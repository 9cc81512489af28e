"""Interval hull of the united solution set of A(p) x = b(p).

Each one-parameter slice traces a rational curve t -> A(t)^-1 b(t) whose
components are ratios of determinant polynomials (Cramer's rule). The hull
is the componentwise union of the exact ranges of those curves. A slice
determinant vanishing on its interval means the family is singular, and
that is reported instead of a hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from ._parallel import fan_out
from .core import Interval, Matrix, ParametricLinearSystem, SubproblemKey, normalize_system, vec_comb
from .exactla import det_exact, det_pencil, slice_pencil
from .poly import UnivariatePolynomial
from .realroots import DEFAULT_TOL, PoleInInterval, RangeResult, RealRoot, isolate_roots, rational_extrema, reduce_fraction
from .regularity import Witness, _witness, enumerate_subproblems


@dataclass(frozen=True)
class Attainment:
    """Where a hull endpoint is reached: component i of slice ``key`` at free value ``t``."""

    value: Interval
    key: SubproblemKey
    t: RealRoot
    component: int


@dataclass(frozen=True)
class HullResult:
    status: str  # "hull" or "singular"
    hull: tuple[Interval, ...] = ()
    attaining: tuple[tuple[Attainment, Attainment], ...] = ()
    witness: Witness | None = None
    range_calls: int = 0

    @property
    def singular(self) -> bool:
        return self.status == "singular"


def _replace_column(M: Matrix, i: int, col) -> Matrix:
    return tuple(tuple(col[r] if j == i else x for j, x in enumerate(row)) for r, row in enumerate(M))


def _slice_rhs(sys: ParametricLinearSystem, key: SubproblemKey):
    fixed = key.vertex_values(sys.matrix.radii)
    base = vec_comb(sys.b0, list(fixed.values()), [sys.b[i] for i in fixed])
    return base, sys.b[key.k]


def cramer_curve(sys: ParametricLinearSystem, key: SubproblemKey, i: int) -> tuple[UnivariatePolynomial, UnivariatePolynomial]:
    """Component i of the slice solution as num(t)/den(t), reduced, den monic."""
    sys = normalize_system(sys)
    M0, M1 = slice_pencil(sys.matrix, key)
    r0, r1 = _slice_rhs(sys, key)
    den = det_pencil(M0, M1)
    num = det_pencil(_replace_column(M0, i, r0), _replace_column(M1, i, r1))
    return reduce_fraction(num, den)


def _hull_slice(sys: ParametricLinearSystem, tol, key: SubproblemKey):
    pm = sys.matrix
    rk = pm.radii[key.k]
    iv = Interval(-rk, rk)
    M0, M1 = slice_pencil(pm, key)
    det = det_pencil(M0, M1)
    if det.is_zero():
        return _witness(pm, key, RealRoot.from_fraction(0), whole=True)
    roots = isolate_roots(det, iv, tol)
    if roots:
        return _witness(pm, key, roots.values[0])
    out: list[RangeResult] = []
    for i in range(pm.n):
        num, den = cramer_curve(sys, key, i)
        try:
            out.append(rational_extrema(num, den, iv, tol))
        except PoleInInterval as e:  # not reachable once det has no root in iv
            return _witness(pm, key, e.pole)
    return out


def solve_hull(sys: ParametricLinearSystem, tol=DEFAULT_TOL, workers: int = 1) -> HullResult:
    """Exact interval hull, or a singularity report with a witness parameter vector."""
    sys = normalize_system(sys)
    pm = sys.matrix
    if det_exact(pm.A0) == 0:
        w = pm.to_original([Fraction(0)] * pm.K)
        return HullResult("singular", witness=Witness(None, None, w, w, w))
    if pm.K == 0:
        from .exactla import solve_exact

        x = solve_exact(pm.A0, sys.b0)
        return HullResult("hull", tuple(Interval.point(v) for v in x))
    keys = enumerate_subproblems(pm, 1)
    lows: list[Attainment | None] = [None] * pm.n
    highs: list[Attainment | None] = [None] * pm.n
    calls = 0
    results = fan_out(partial(_hull_slice, sys, tol), keys, workers)
    try:
        for key, res in zip(keys, results):
            if isinstance(res, Witness):
                return HullResult("singular", witness=res, range_calls=calls)
            calls += len(res)
            for i, rr in enumerate(res):
                lo = Attainment(rr.low.value, key, rr.low.at, i)
                hi = Attainment(rr.high.value, key, rr.high.at, i)
                if lows[i] is None or lo.value.lo < lows[i].value.lo:
                    lows[i] = lo
                if highs[i] is None or hi.value.hi > highs[i].value.hi:
                    highs[i] = hi
    finally:
        results.close()
    hull = tuple(Interval(lo.value.lo, hi.value.hi) for lo, hi in zip(lows, highs))
    return HullResult("hull", hull, tuple(zip(lows, highs)), None, calls)


def attained_value(sys: ParametricLinearSystem, att: Attainment) -> Fraction:
    """Curve value at the recorded attainment point (its midpoint if irrational)."""
    num, den = cramer_curve(sys, att.key, att.component)
    t = att.t.mid
    return num(t) / den(t)
