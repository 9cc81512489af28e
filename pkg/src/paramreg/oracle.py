"""Independent brute-force checks: grid scans, random sampling, cofactor expansion.

Nothing here relies on the slice machinery, which is the point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .core import Interval, ParametricLinearSystem, ParametricMatrix, SubproblemKey, evaluate, normalize
from .exactla import SingularMatrix, det_exact, solve_exact
from .poly import UnivariatePolynomial


@dataclass(frozen=True)
class GridWitness:
    """A singular point between two adjacent grid nodes (or on one, when ``exact``)."""

    params: tuple
    params_lo: tuple
    params_hi: tuple
    exact: bool


def _axis_values(iv: Interval, resolution: int) -> list[Fraction]:
    if resolution == 1 or iv.lo == iv.hi:
        return [iv.mid] if resolution == 1 else [iv.lo] * resolution
    step = (iv.hi - iv.lo) / (resolution - 1)
    return [iv.lo + j * step for j in range(resolution)]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _grid_signs(pm: ParametricMatrix, axes: list[list[Fraction]]) -> np.ndarray:
    res = len(axes[0])
    shape = (res,) * pm.K
    idx = np.indices(shape).reshape(pm.K, -1).T
    vals = np.array([[float(v) for v in ax] for ax in axes])
    P = vals[np.arange(pm.K)[None, :], idx]
    A0 = np.array(pm.A0, dtype=float)
    A = np.array(pm.A, dtype=float)
    dets, scales = _kernels.grid_determinants(A0, A, P)
    signs = np.sign(dets).astype(np.int8)
    unsure = np.abs(dets) <= 1e-9 * np.maximum(scales, 1e-300)
    for s in np.nonzero(unsure)[0]:
        p = [axes[k][idx[s, k]] for k in range(pm.K)]
        signs[s] = _sign(det_exact(evaluate(pm, p)))
    return signs.reshape(shape)


def _bisect_edge(pm: ParametricMatrix, lo: list[Fraction], hi: list[Fraction], slo: int, tol) -> GridWitness:
    a, b = list(lo), list(hi)
    while max(abs(y - x) for x, y in zip(a, b)) > tol:
        m = [(x + y) / 2 for x, y in zip(a, b)]
        sm = _sign(det_exact(evaluate(pm, m)))
        if sm == 0:
            w = pm.to_original(m)
            return GridWitness(w, w, w, True)
        if sm == slo:
            a = m
        else:
            b = m
    mid = [(x + y) / 2 for x, y in zip(a, b)]
    return GridWitness(pm.to_original(mid), pm.to_original(a), pm.to_original(b), False)


def grid_scan(pm: ParametricMatrix, resolution: int = 9, tol=Fraction(1, 10**9), limit: int | None = None) -> list[GridWitness]:
    """Singular points found by a uniform grid over the box.

    Grid nodes with det = 0 (exactly) come first, then one bisected point
    per sign-changing grid edge. Within each group, witnesses on
    lower-dimensional faces of the box come first, then row-major order of
    the (lower) node, then axis. Edge witnesses are refined by exact
    bisection to ``tol``.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    pm = normalize(pm)
    if pm.K == 0:
        if det_exact(pm.A0) == 0:
            return [GridWitness((), (), (), True)]
        return []
    axes = [_axis_values(iv, resolution) for iv in pm.p]
    signs = _grid_signs(pm, axes)
    last = resolution - 1
    interior = lambda node, free=None: sum(  # noqa: E731
        1 for k, i in enumerate(node) if k == free or 0 < i < last
    )
    out: list[GridWitness] = []
    zeros = sorted((tuple(int(i) for i in node) for node in zip(*np.nonzero(signs == 0))), key=lambda n: (interior(n), n))
    for node in zeros:
        w = pm.to_original([axes[k][node[k]] for k in range(pm.K)])
        out.append(GridWitness(w, w, w, True))
        if limit is not None and len(out) >= limit:
            return out
    edges = []
    for ax in range(pm.K):
        lo = np.take(signs, range(resolution - 1), axis=ax)
        hi = np.take(signs, range(1, resolution), axis=ax)
        for node in zip(*np.nonzero(lo.astype(int) * hi < 0)):
            edges.append((tuple(int(i) for i in node), ax))
    edges.sort(key=lambda e: (interior(e[0], e[1]), e))
    for node, ax in edges:
        lo = [axes[k][node[k]] for k in range(pm.K)]
        hi = list(lo)
        hi[ax] = axes[ax][node[ax] + 1]
        out.append(_bisect_edge(pm, lo, hi, int(signs[node]), Fraction(tol)))
        if limit is not None and len(out) >= limit:
            break
    return out


def grid_scan_singular(pm: ParametricMatrix, resolution: int = 9, tol=Fraction(1, 10**9)) -> GridWitness | None:
    """First singular point found by :func:`grid_scan`, or None."""
    found = grid_scan(pm, resolution, tol, limit=1)
    return found[0] if found else None


def sample_hull_inner(sys: ParametricLinearSystem, samples: int = 200, seed: int = 0) -> tuple[Interval, ...]:
    """Componentwise hull of exact solutions at random rational parameters (an inner estimate).

    Box vertices are always included. Singular samples are skipped.
    """
    pm = sys.matrix
    rng = random.Random(seed)
    den = 1 << 20
    points: list[list[Fraction]] = []
    if pm.K <= 10:
        for mask in range(1 << pm.K):
            points.append([iv.hi if mask >> k & 1 else iv.lo for k, iv in enumerate(pm.p)])
    while len(points) < samples + min(1 << pm.K, 1024):
        points.append([iv.lo + (iv.hi - iv.lo) * Fraction(rng.randint(0, den), den) for iv in pm.p])
    lo = hi = None
    for p in points:
        try:
            x = solve_exact(evaluate(pm, p), sys.rhs(p))
        except SingularMatrix:
            continue
        lo = list(x) if lo is None else [min(a, b) for a, b in zip(lo, x)]
        hi = list(x) if hi is None else [max(a, b) for a, b in zip(hi, x)]
    if lo is None:
        raise SingularMatrix("every sample was singular")
    return tuple(Interval(a, b) for a, b in zip(lo, hi))


def _laplace(M: list[list[UnivariatePolynomial]]) -> UnivariatePolynomial:
    if len(M) == 1:
        return M[0][0]
    total = UnivariatePolynomial()
    for j, a in enumerate(M[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = a * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_poly_bruteforce(pm: ParametricMatrix, key: SubproblemKey) -> UnivariatePolynomial:
    """Slice determinant by cofactor expansion on polynomial entries (n <= 4)."""
    if pm.n > 4:
        raise ValueError("cofactor expansion is limited to n <= 4")
    pm = normalize(pm)
    fixed = key.vertex_values(pm.radii)
    k = key.k
    M = []
    for i in range(pm.n):
        row = []
        for j in range(pm.n):
            c = pm.A0[i][j] + sum((v * pm.A[q][i][j] for q, v in fixed.items()), Fraction(0))
            row.append(UnivariatePolynomial([c, pm.A[k][i][j]]))
        M.append(row)
    return _laplace(M)


def exact_det_at(pm: ParametricMatrix, p: Sequence, strict: bool = True) -> Fraction:
    return det_exact(evaluate(pm, p, strict))
