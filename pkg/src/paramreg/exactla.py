"""Exact rational linear algebra and determinant polynomials."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .core import Matrix, ParametricMatrix, SubproblemKey, Vector, identity, lin_comb, mat_scale
from .poly import UnivariatePolynomial, interpolate, small_nodes


class SingularMatrix(ArithmeticError):
    """Raised when an exact inverse or solve meets a zero determinant."""


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(M: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free elimination.

    Each row is scaled to integers first, so the elimination itself only
    performs exact integer divisions.
    """
    n = len(M)
    if n == 0:
        return Fraction(1)
    rows, scale = [], 1
    for row in M:
        row = [x if isinstance(x, Fraction) else Fraction(x) for x in row]
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        den = lcm(*(x.denominator for x in row))
        rows.append([x.numerator * (den // x.denominator) for x in row])
        scale *= den
    return Fraction(_bareiss(rows), scale)


def _gauss_jordan(M: Sequence[Sequence], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    a = [[Fraction(x) for x in row] + r for row, r in zip(M, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                rc = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], rc)]
    return [row[n:] for row in a]


def inverse_exact(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    out = _gauss_jordan(M, [list(r) for r in identity(n)])
    return tuple(tuple(r) for r in out)


def solve_exact(M: Sequence[Sequence], b: Sequence) -> Vector:
    out = _gauss_jordan(M, [[Fraction(x)] for x in b])
    return tuple(r[0] for r in out)


def det_pencil(M0: Matrix, M1: Matrix) -> UnivariatePolynomial:
    """det(M0 + t*M1) as a polynomial in t, by interpolation at n+1 small integers."""
    n = len(M0)
    nodes = small_nodes(n + 1)
    values = [det_exact(lin_comb(M0, [x], [M1])) for x in nodes]
    return interpolate(nodes, values)


def slice_pencil(pm: ParametricMatrix, key: SubproblemKey) -> tuple[Matrix, Matrix]:
    """(base, direction) with the slice matrix equal to base + t*direction.

    ``pm`` must be normalized, so A0 already is the center matrix.
    """
    fixed = key.vertex_values(pm.radii)
    base = lin_comb(pm.A0, list(fixed.values()), [pm.A[i] for i in fixed])
    return base, pm.A[key.k]


def det_polynomial(pm: ParametricMatrix, key: SubproblemKey) -> UnivariatePolynomial:
    base, direction = slice_pencil(pm, key)
    return det_pencil(base, direction)


def char_polynomial(B: Matrix) -> UnivariatePolynomial:
    """det(lambda*I - B); monic of degree n."""
    return det_pencil(mat_scale(B, -1), identity(len(B)))
