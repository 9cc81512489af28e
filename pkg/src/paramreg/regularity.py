"""Regularity tests for interval parametric matrices.

The exact criteria reduce the K-parameter family to K*2**(K-1) slices in
which one parameter moves over its interval and every other parameter sits
at an endpoint. A family is regular exactly when no slice determinant
vanishes on its interval, equivalently when the largest real eigenvalue
magnitude of the slice pencils stays below one.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from math import comb
from typing import Sequence

import numpy as np

from . import _kernels
from ._parallel import fan_out
from .core import (
    Interval,
    Matrix,
    ParametricMatrix,
    SubproblemKey,
    lin_comb,
    mat_abs,
    mat_mul,
    normalize,
    sign_vectors,
)
from .exactla import SingularMatrix, char_polynomial, det_exact, det_polynomial, inverse_exact
from .poly import BivariatePolynomial, UnivariatePolynomial, interpolate, poly_gcd, small_nodes
from .realroots import (
    DEFAULT_TOL,
    RealRoot,
    SharedFactor,
    all_real_roots,
    count_real_roots,
    isolate_roots,
    max_abs_real_root,
    real_max,
    resultant,
    sort_real,
)

log = logging.getLogger(__name__)


class Status(str, Enum):
    REGULAR = "Regular"
    SINGULAR = "Singular"
    UNKNOWN = "Unknown"


class CenterSingular(ArithmeticError):
    """The center matrix (or a slice center) is singular; ``witness`` is that parameter vector."""

    def __init__(self, witness: tuple, message: str = "center matrix is singular"):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Witness:
    """A parameter vector (user coordinates) at which the matrix is singular.

    For an irrational root, ``params_lo``/``params_hi`` bracket it along the
    free parameter and ``params`` is their midpoint.
    """

    key: SubproblemKey | None
    value: RealRoot | None
    params: tuple
    params_lo: tuple
    params_hi: tuple
    whole_slice: bool = False

    @property
    def exact(self) -> bool:
        return self.value is None or self.value.is_exact


@dataclass(frozen=True)
class SliceCertificate:
    key: SubproblemKey
    polynomial: UnivariatePolynomial
    roots: int


@dataclass(frozen=True)
class RegularityVerdict:
    status: Status
    witnesses: tuple[Witness, ...] = ()
    certificate: tuple[SliceCertificate, ...] = ()
    slices: int = 0
    center_singular: bool = False

    @property
    def regular(self) -> bool:
        return self.status is Status.REGULAR


def _normalized(pm: ParametricMatrix) -> ParametricMatrix:
    return pm if pm.is_normalized() else normalize(pm)


def _center_witness(pm: ParametricMatrix) -> tuple:
    return pm.to_original([Fraction(0)] * pm.K)


def _perron_root(S: Matrix, tol) -> RealRoot:
    """Spectral radius of an entrywise nonnegative matrix (its largest real eigenvalue)."""
    r = max_abs_real_root(char_polynomial(S), tol)
    return r if r is not None else RealRoot.from_fraction(0)


def _dependency_products(pm: ParametricMatrix) -> tuple[Matrix, list[Matrix]]:
    try:
        inv = inverse_exact(pm.A0)
    except SingularMatrix:
        raise CenterSingular(_center_witness(pm)) from None
    return inv, [mat_mul(inv, a) for a in pm.A]


@dataclass(frozen=True)
class SufficientResult:
    rho: RealRoot
    holds: bool


def sufficient_condition_rho(pm: ParametricMatrix, tol=DEFAULT_TOL) -> SufficientResult:
    """rho(sum_k r_k |C^-1 A_k|) < 1 with C the center matrix; only ever proves regularity."""
    pm = _normalized(pm)
    n = pm.n
    _, Ms = _dependency_products(pm)
    S = lin_comb(tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n)), pm.radii, [mat_abs(M) for M in Ms])
    rho = _perron_root(S, tol)
    return SufficientResult(rho, rho.compare(1) < 0)


def enumerate_subproblems(pm: ParametricMatrix, t: int = 1) -> list[SubproblemKey]:
    """Keys for the t-parameter slices: subsets in lexicographic order, then sign vectors."""
    K, n = pm.K, pm.n
    limit = min(max(n - 1, 1), K)
    if not 1 <= t <= limit:
        raise ValueError(f"subset size t={t} must lie in [1, {limit}] for n={n}, K={K}")
    keys = []
    for q in itertools.combinations(range(K), t):
        for eps in sign_vectors(K - t):
            keys.append(SubproblemKey(q, eps))
    assert len(keys) == comb(K, t) * 2 ** (K - t)
    return keys


def _witness(pm: ParametricMatrix, key: SubproblemKey, root: RealRoot, whole: bool = False) -> Witness:
    r = pm.radii
    vec = lambda x: pm.to_original(key.full_vector(r, [x]))  # noqa: E731
    return Witness(key, root, vec(root.mid), vec(root.lo), vec(root.hi), whole)


def _slice_roots(pm: ParametricMatrix, tol, key: SubproblemKey) -> tuple[SliceCertificate, list[Witness]]:
    q = det_polynomial(pm, key)
    rk = pm.radii[key.k]
    if q.is_zero():
        return SliceCertificate(key, q, -1), [_witness(pm, key, RealRoot.from_fraction(0), whole=True)]
    roots = isolate_roots(q, Interval(-rk, rk), tol)
    return SliceCertificate(key, q, len(roots)), [_witness(pm, key, r) for r in roots.values]


def heuristic_order(pm: ParametricMatrix, keys: Sequence[SubproblemKey]) -> list[SubproblemKey]:
    """Slices whose free parameter has the largest rho(r_k |C^-1 A_k|) first."""
    _, Ms = _dependency_products(pm)
    score = {}
    for k in range(pm.K):
        score[k] = float(_perron_root(mat_abs(Ms[k]), Fraction(1, 10**6)).mid) * float(pm.radii[k])
    return sorted(keys, key=lambda key: -score[key.k])


def check_regularity(
    pm: ParametricMatrix,
    tol=DEFAULT_TOL,
    exhaustive: bool = False,
    workers: int = 1,
    use_heuristic_order: bool = False,
) -> RegularityVerdict:
    """Decide regularity exactly by root isolation on every slice determinant.

    Stops at the first slice with a root unless ``exhaustive`` is set, in
    which case every singular slice and all its roots are reported.
    """
    pm = _normalized(pm)
    if det_exact(pm.A0) == 0:
        w = _center_witness(pm)
        return RegularityVerdict(Status.SINGULAR, (Witness(None, None, w, w, w),), (), 0, True)
    if pm.K == 0:
        return RegularityVerdict(Status.REGULAR, (), (), 0)
    keys = enumerate_subproblems(pm, 1)
    if use_heuristic_order:
        keys = heuristic_order(pm, keys)
    certs, witnesses = [], []
    results = fan_out(partial(_slice_roots, pm, tol), keys, workers)
    try:
        for cert, ws in results:
            certs.append(cert)
            if ws:
                witnesses.extend(ws)
                if not exhaustive:
                    break
    finally:
        results.close()
    status = Status.SINGULAR if witnesses else Status.REGULAR
    return RegularityVerdict(status, tuple(witnesses), tuple(certs), len(keys))


@dataclass(frozen=True)
class ReducedResult:
    status: Status
    slices: tuple[tuple[SubproblemKey, RealRoot], ...]

    @property
    def max_rho(self) -> RealRoot | None:
        return real_max(r for _, r in self.slices)


def check_regularity_reduced_sufficient(pm: ParametricMatrix, t: int = 1, tol=DEFAULT_TOL) -> ReducedResult:
    """Apply the spectral-radius sufficient test to every t-parameter slice.

    Regular when every slice passes, Unknown otherwise; never Singular.
    """
    pm = _normalized(pm)
    _dependency_products(pm)
    n = pm.n
    zero = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    out = []
    for key in enumerate_subproblems(pm, t):
        fixed = key.vertex_values(pm.radii)
        center = lin_comb(pm.A0, list(fixed.values()), [pm.A[i] for i in fixed])
        try:
            inv = inverse_exact(center)
        except SingularMatrix:
            w = pm.to_original(key.full_vector(pm.radii, [Fraction(0)] * len(key.q)))
            raise CenterSingular(w, f"slice center of {key.label(pm)} is singular") from None
        S = lin_comb(zero, [pm.radii[i] for i in key.q], [mat_abs(mat_mul(inv, pm.A[i])) for i in key.q])
        out.append((key, _perron_root(S, tol)))
    ok = all(r.compare(1) < 0 for _, r in out)
    return ReducedResult(Status.REGULAR if ok else Status.UNKNOWN, tuple(out))


# -- largest real eigenvalue magnitude over the slice pencils ------------------


@dataclass(frozen=True)
class SliceRho:
    """Max |lambda| over real eigenvalues of C + t*D, t in [-r_k, r_k].

    ``t`` locates the maximum (approximate when it is an irrational interior
    point) and ``sign`` is the sign of the eigenvalue attaining it.
    """

    key: SubproblemKey
    value: RealRoot
    t: Fraction | None
    sign: int
    certified: bool = True


@dataclass(frozen=True)
class Rho0Result:
    max: RealRoot
    argmax: SliceRho | None
    per_slice: tuple[SliceRho, ...]
    certified: bool = True


def slice_char_bivariate(C: Matrix, D: Matrix) -> BivariatePolynomial:
    """d(lambda, t) = det(lambda*I - C - t*D); variable 0 is lambda, 1 is t."""
    n = len(C)
    nodes = small_nodes(n + 1)
    charpolys = [char_polynomial(lin_comb(C, [x], [D])).coeffs for x in nodes]
    coeffs_in_t = []
    for i in range(n + 1):
        ys = [cp[i] if i < len(cp) else Fraction(0) for cp in charpolys]
        coeffs_in_t.append(interpolate(nodes, ys))
    # coeffs_in_t[i] is the t-polynomial multiplying lambda**i
    return BivariatePolynomial.from_coefficients(coeffs_in_t, var=0)


def _lambda_hits_slice(d: BivariatePolynomial, lam: Fraction, a: Fraction, b: Fraction) -> bool:
    u = d.evaluate(0, lam)
    if u.is_zero():
        return True
    if u.degree == 0:
        return False
    return count_real_roots(u, Interval(a, b)) > 0


def _rational_below(c: RealRoot, lower: RealRoot | None) -> Fraction:
    if lower is None:
        return c.lo - 1
    while True:
        if lower.hi < c.lo:
            return (lower.hi + c.lo) / 2
        c, lower = c.bisect(), lower.bisect()


def _location_exact(d: BivariatePolynomial, lam: Fraction, a: Fraction, b: Fraction) -> Fraction:
    u = d.evaluate(0, lam)
    if u.is_zero() or u.degree <= 0:
        return Fraction(0)
    g = poly_gcd(u, u.derivative())
    for cand in (g, u):
        if cand.degree > 0:
            rs = isolate_roots(cand, Interval(a, b))
            if rs:
                return rs.values[0].mid
    return Fraction(0)


def _location_numeric(d: BivariatePolynomial, lam: RealRoot, a: Fraction, b: Fraction):
    """Approximate t in [a, b] minimizing |d(lam, t)|; returns (t, residual)."""
    x = float(lam.refined(Fraction(1, 10**15)).mid)
    coeffs = [float(c) for c in d.evaluate(0, Fraction(x)).coeffs]
    if len(coeffs) <= 1:
        return Fraction(0), abs(coeffs[0]) if coeffs else 0.0
    ts = [float(a), float(b)]
    for poly in (coeffs, [i * c for i, c in enumerate(coeffs)][1:]):
        if len(poly) > 1:
            for z in np.roots(poly[::-1]):
                if abs(z.imag) < 1e-7 and float(a) - 1e-12 <= z.real <= float(b) + 1e-12:
                    ts.append(min(max(z.real, float(a)), float(b)))
    vals = [abs(np.polyval(coeffs[::-1], t)) for t in ts]
    i = int(np.argmin(vals))
    scale = max(abs(c) for c in coeffs) or 1.0
    return Fraction(ts[i]), vals[i] / scale


def _slice_sup(d: BivariatePolynomial, a: Fraction, b: Fraction, R: UnivariatePolynomial | None, tol):
    """Supremum of {lambda : d(lambda, t) = 0 for some t in [a, b]}.

    Returns (value, t, certified) or None when the set is empty. Every
    boundary point of that set is either an eigenvalue at t = a or t = b, or
    a root of the resultant R of d and its t-derivative; between consecutive
    candidates membership is constant and is decided at a rational point.
    """
    if d.degree(1) <= 0:
        roots = all_real_roots(d.evaluate(1, 0), tol).values
        return (roots[-1], a, True) if roots else None
    cands = []
    for e in (a, b):
        cands.extend((r, True, e) for r in all_real_roots(d.evaluate(1, e), tol).values)
    if R is not None and R.degree > 0:
        cands.extend((r, False, None) for r in all_real_roots(R, tol).values)
    if not cands:
        return None
    vals = sort_real([c[0] for c in cands])
    meta = {}
    for r, boundary, e in cands:
        meta.setdefault(id(r), (boundary, e))
    # merge equal values, keeping boundary information
    merged: list[list] = []
    for v in vals:
        boundary, e = meta[id(v)]
        if merged and merged[-1][0].compare(v) == 0:
            if boundary and not merged[-1][1]:
                merged[-1][1:] = [True, e]
            continue
        merged.append([v, boundary, e])
    merged.reverse()
    for i, (c, boundary, e) in enumerate(merged):
        if boundary:
            return c, e, True
        lower = merged[i + 1][0] if i + 1 < len(merged) else None
        mu = _rational_below(c, lower)
        if _lambda_hits_slice(d, mu, a, b):
            if c.is_exact:
                return c, _location_exact(d, c.exact, a, b), True
            return c, _location_numeric(d, c, a, b)[0], True
        # c can still be an isolated real point of the eigenvalue curve
        if c.is_exact:
            if _lambda_hits_slice(d, c.exact, a, b):
                return c, _location_exact(d, c.exact, a, b), True
        else:
            t, resid = _location_numeric(d, c, a, b)
            if resid < 1e-9:
                log.debug("accepting isolated irrational candidate %r without certificate", c)
                return c, t, False
    return None


def _slice_rho0(Ms: Sequence[Matrix], radii: Sequence[Fraction], tol, key: SubproblemKey) -> SliceRho:
    k = key.k
    fixed = key.vertex_values(radii)
    n = len(Ms[k])
    zero = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    C = lin_comb(zero, list(fixed.values()), [Ms[i] for i in fixed])
    D = Ms[k]
    a, b = -radii[k], radii[k]
    d = slice_char_bivariate(C, D)
    R = None
    if d.degree(1) > 0:
        try:
            R = resultant(d, d.derivative(1), eliminate=1)
        except SharedFactor:
            log.info("shared factor in slice %s; falling back to sampling", key)
            return _sampled_slice(C, D, a, b, key)
    top = _slice_sup(d, a, b, R, tol)
    bot = _slice_sup(d.reflect(0), a, b, R.reflect() if R is not None else None, tol)
    best = None
    for res, sign in ((top, 1), (bot, -1)):
        if res is None:
            continue
        v, t, cert = res
        if best is None or v.compare(best[0]) > 0:
            best = (v, t, cert, sign)
    if best is None or best[0].compare(0) <= 0:
        zero_cert = all(r is None or r[2] for r in (top, bot))
        return SliceRho(key, RealRoot.from_fraction(0), None, 0, zero_cert)
    v, t, cert, sign = best
    return SliceRho(key, v, t, sign, cert)


def _sampled_slice(C: Matrix, D: Matrix, a: Fraction, b: Fraction, key, samples: int = 4001) -> SliceRho:
    Cf = np.array([[float(x) for x in row] for row in C])
    Df = np.array([[float(x) for x in row] for row in D])
    ts = np.linspace(float(a), float(b), samples)
    vals, signs = _kernels.sampled_real_rho0(Cf, Df, ts)
    i = int(np.argmax(vals))
    if vals[i] <= 0:
        return SliceRho(key, RealRoot.from_fraction(0), None, 0, False)
    return SliceRho(key, RealRoot.approximate(float(vals[i]), 1e-6), Fraction(float(ts[i])), int(signs[i]), False)


def max_rho0(pm: ParametricMatrix, tol=DEFAULT_TOL, workers: int = 1) -> Rho0Result:
    """Largest real-eigenvalue magnitude of C^-1 (t A_k + sum eps_i r_i A_i) over all slices."""
    pm = _normalized(pm)
    _, Ms = _dependency_products(pm)
    if pm.K == 0:
        return Rho0Result(RealRoot.from_fraction(0), None, (), True)
    keys = enumerate_subproblems(pm, 1)
    per_slice = tuple(fan_out(partial(_slice_rho0, Ms, pm.radii, tol), keys, workers))
    best = None
    for s in per_slice:
        if best is None or s.value.compare(best.value) > 0:
            best = s
    certified = all(s.certified for s in per_slice)
    if best.value.compare(0) == 0:
        return Rho0Result(RealRoot.from_fraction(0), None, per_slice, certified)
    return Rho0Result(best.value, best, per_slice, certified)
