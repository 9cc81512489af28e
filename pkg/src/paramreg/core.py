"""Interval parametric matrices A(p) = A0 + sum_k p_k A_k and their linear systems.

Everything is exact: scalars are :class:`fractions.Fraction`, matrices are
tuples of tuples. Parameter indices are 0-based here; reports add 1.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


class OutsideBox(ValueError):
    """A parameter vector lies outside the parameter box."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}; pass a string or Fraction")
    return Fraction(x)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


def as_vector(xs: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in xs)


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def mat_abs(a: Matrix) -> Matrix:
    return tuple(tuple(abs(x) for x in row) for row in a)


def lin_comb(base: Matrix, coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    """base + sum_i coeffs[i] * mats[i]."""
    out = [list(row) for row in base]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for i, row in enumerate(m):
            o = out[i]
            for j, x in enumerate(row):
                if x:
                    o[j] += c * x
    return tuple(tuple(r) for r in out)


def vec_comb(base: Sequence, coeffs: Sequence, vecs: Sequence[Sequence]) -> Vector:
    out = list(base)
    for c, v in zip(coeffs, vecs):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


@dataclass(frozen=True)
class Interval:
    """Closed interval with exact endpoints. Also used as an enclosure."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def is_symmetric(self) -> bool:
        return self.lo == -self.hi

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def scaled(self, c) -> "Interval":
        return self * c

    # enclosure arithmetic, used for evaluating curves at bracketed points
    def _coerce(self, other):
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction)):
            return Interval(other, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Origin:
    """How a normalized family maps back to the user's parameters.

    ``shift`` is the user's midpoint vector (all original parameters);
    ``kept[i]`` is the original index of normalized parameter i.
    """

    shift: Vector
    kept: tuple[int, ...]

    def to_original(self, p: Sequence) -> tuple:
        out = list(self.shift)
        for i, v in zip(self.kept, p):
            out[i] = out[i] + v
        return tuple(out)


@dataclass(frozen=True)
class ParametricMatrix:
    A0: Matrix
    A: tuple[Matrix, ...]
    p: tuple[Interval, ...]
    origin: Origin | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "A0", as_matrix(self.A0))
        object.__setattr__(self, "A", tuple(as_matrix(a) for a in self.A))
        object.__setattr__(
            self, "p", tuple(iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.p)
        )
        n = len(self.A0)
        if any(len(row) != n for row in self.A0):
            raise ValueError("A0 must be square")
        if len(self.A) != len(self.p):
            raise ValueError(f"{len(self.A)} dependency matrices but {len(self.p)} intervals")
        for k, a in enumerate(self.A):
            if len(a) != n or any(len(row) != n for row in a):
                raise ValueError(f"A[{k}] is not {n}x{n}")

    @property
    def n(self) -> int:
        return len(self.A0)

    @property
    def K(self) -> int:
        return len(self.A)

    @property
    def center(self) -> Vector:
        return tuple(iv.mid for iv in self.p)

    @property
    def radii(self) -> Vector:
        return tuple(iv.rad for iv in self.p)

    def is_normalized(self) -> bool:
        return self.origin is not None and all(iv.is_symmetric() and iv.hi > 0 for iv in self.p)

    def to_original(self, p: Sequence) -> tuple:
        """Map a parameter vector of this family to the user's coordinates."""
        return self.origin.to_original(p) if self.origin is not None else tuple(p)

    def original_index(self, k: int) -> int:
        return self.origin.kept[k] if self.origin is not None else k

    def scaled(self, c) -> "ParametricMatrix":
        """Multiply A0 and every A_k by c; intervals unchanged."""
        c = as_fraction(c)
        return ParametricMatrix(mat_scale(self.A0, c), tuple(mat_scale(a, c) for a in self.A), self.p, self.origin)

    def permuted(self, perm: Sequence[int]) -> "ParametricMatrix":
        """Simultaneous row and column permutation of every matrix."""

        def pm_(m):
            return tuple(tuple(m[perm[i]][perm[j]] for j in range(len(perm))) for i in range(len(perm)))

        return ParametricMatrix(pm_(self.A0), tuple(pm_(a) for a in self.A), self.p, self.origin)

    def with_radii_scaled(self, s) -> "ParametricMatrix":
        """Same midpoints, radii multiplied by s > 0."""
        s = as_fraction(s)
        p = tuple(Interval(iv.mid - s * iv.rad, iv.mid + s * iv.rad) for iv in self.p)
        return ParametricMatrix(self.A0, self.A, p)


@dataclass(frozen=True)
class ParametricLinearSystem:
    matrix: ParametricMatrix
    b0: Vector
    b: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "b0", as_vector(self.b0))
        object.__setattr__(self, "b", tuple(as_vector(v) for v in self.b))
        n = self.matrix.n
        if len(self.b0) != n:
            raise ValueError(f"b0 has length {len(self.b0)}, expected {n}")
        if len(self.b) != self.matrix.K:
            raise ValueError(f"{len(self.b)} right-hand-side vectors but K = {self.matrix.K}")
        for k, v in enumerate(self.b):
            if len(v) != n:
                raise ValueError(f"b[{k}] has length {len(v)}, expected {n}")

    def rhs(self, p: Sequence) -> Vector:
        return vec_comb(self.b0, [as_fraction(x) for x in p], self.b)


@dataclass(frozen=True, order=True)
class SubproblemKey:
    """Free parameter indices ``q`` plus signs ``eps`` for every other parameter.

    With a single free index this is the one-parameter slice
    A(c) + t*A_k + sum_{i != k} eps_i * r_i * A_i.
    """

    q: tuple[int, ...]
    eps: tuple[int, ...]

    @classmethod
    def single(cls, k: int, eps: Sequence[int]) -> "SubproblemKey":
        return cls((k,), tuple(eps))

    @property
    def k(self) -> int:
        if len(self.q) != 1:
            raise AttributeError("k is only defined for one-parameter slices")
        return self.q[0]

    def fixed_indices(self, K: int) -> list[int]:
        return [i for i in range(K) if i not in self.q]

    def vertex_values(self, radii: Sequence[Fraction]) -> dict[int, Fraction]:
        """Values eps_i * r_i of the fixed parameters."""
        fixed = self.fixed_indices(len(radii))
        return {i: e * radii[i] for i, e in zip(fixed, self.eps)}

    def full_vector(self, radii: Sequence[Fraction], free_values: Sequence) -> tuple:
        """Parameter vector (normalized coordinates) with free entries filled in."""
        out = [None] * len(radii)
        for i, v in self.vertex_values(radii).items():
            out[i] = v
        for i, v in zip(self.q, free_values):
            out[i] = v
        return tuple(out)

    def label(self, pm: "ParametricMatrix | None" = None) -> str:
        idx = [pm.original_index(i) if pm is not None else i for i in self.q]
        free = ",".join(str(i + 1) for i in idx)
        signs = ",".join("+1" if e > 0 else "-1" for e in self.eps)
        return f"k={free} eps=({signs})"


def evaluate(pm: ParametricMatrix, p: Sequence, strict: bool = True) -> Matrix:
    """A0 + sum_k p_k A_k, exactly."""
    if len(p) != pm.K:
        raise ValueError(f"parameter vector has length {len(p)}, expected {pm.K}")
    p = [as_fraction(x) for x in p]
    outside = [k for k, (x, iv) in enumerate(zip(p, pm.p)) if x not in iv]
    if outside:
        msg = f"parameters {[k + 1 for k in outside]} lie outside their intervals"
        if strict:
            raise OutsideBox(msg)
        warnings.warn(msg, stacklevel=2)
    return lin_comb(pm.A0, p, pm.A)


def center_matrix(pm: ParametricMatrix) -> Matrix:
    return lin_comb(pm.A0, pm.center, pm.A)


def normalize(pm: ParametricMatrix) -> ParametricMatrix:
    """Equivalent family centered at zero, degenerate parameters folded into A0.

    The result evaluates at ``p - center`` to what ``pm`` evaluates at ``p``.
    """
    if pm.is_normalized():
        return pm
    base = pm.origin or Origin(tuple(Fraction(0) for _ in range(pm.K)), tuple(range(pm.K)))
    kept = [k for k, iv in enumerate(pm.p) if not iv.is_degenerate()]
    shift = list(base.shift)
    for k, c in enumerate(pm.center):
        shift[base.kept[k]] += c
    origin = Origin(tuple(shift), tuple(base.kept[k] for k in kept))
    return ParametricMatrix(
        center_matrix(pm),
        tuple(pm.A[k] for k in kept),
        tuple(Interval(-pm.p[k].rad, pm.p[k].rad) for k in kept),
        origin,
    )


def normalize_system(sys: ParametricLinearSystem) -> ParametricLinearSystem:
    pm = sys.matrix
    if pm.is_normalized():
        return sys
    npm = normalize(pm)
    kept = [k for k, iv in enumerate(pm.p) if not iv.is_degenerate()]
    return ParametricLinearSystem(npm, sys.rhs(pm.center), tuple(sys.b[k] for k in kept))


def sign_vectors(m: int) -> list[tuple[int, ...]]:
    """All +-1 vectors of length m; first entry most significant, -1 before +1."""
    return list(itertools.product((-1, 1), repeat=m))
