"""Exact real roots: Sturm counting, isolation, comparison of algebraic reals,
resultants and ranges of univariate rational functions."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .core import Interval
from .exactla import det_exact
from .poly import (
    BivariatePolynomial,
    UnivariatePolynomial,
    interpolate,
    poly_gcd,
    small_nodes,
    squarefree_decomposition,
    squarefree_part,
)

DEFAULT_TOL = Fraction(1, 10**9)


class IdenticallyZero(ValueError):
    """The polynomial vanishes identically, so it has no isolated roots."""


class SharedFactor(ArithmeticError):
    """The resultant vanishes identically: the inputs share a factor in the eliminated variable."""


class PoleInInterval(ArithmeticError):
    """The denominator of a rational function has a real root in the interval."""

    def __init__(self, pole: "RealRoot"):
        super().__init__(f"pole at {pole}")
        self.pole = pole


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(q: UnivariatePolynomial) -> list[UnivariatePolynomial]:
    """Sturm chain of a square-free polynomial; members kept primitive (positive scaling)."""
    seq = [q.primitive(), q.derivative().primitive()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return seq


def _variations(seq: Sequence[UnivariatePolynomial], x) -> int:
    count, last = 0, 0
    for p in seq:
        s = p.sign_at(x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _sturm_count(seq, a, b) -> int:
    """Distinct roots in [a, b] of the square-free head of ``seq``."""
    if a > b:
        return 0
    extra = 1 if seq[0](a) == 0 else 0
    if a == b:
        return extra
    # V(a) - V(b) counts roots in (a, b], including when a or b is a root
    return extra + _variations(seq, a) - _variations(seq, b)


def count_real_roots(q: UnivariatePolynomial, iv: Interval) -> int:
    """Number of distinct real roots of q in the closed interval."""
    if q.is_zero():
        raise IdenticallyZero("cannot count roots of the zero polynomial")
    if q.degree == 0:
        return 0
    return _sturm_count(sturm_sequence(squarefree_part(q)), iv.lo, iv.hi)


@dataclass(frozen=True)
class RealRoot:
    """A real algebraic number: the unique root of ``poly`` in ``[lo, hi]``.

    ``poly`` is square-free with integer coefficients. When ``exact`` is set,
    lo == hi == exact. Otherwise poly changes sign strictly across (lo, hi).
    ``poly`` may be None for sampled, uncertified values; such values cannot
    be refined and compare by midpoint.
    """

    poly: UnivariatePolynomial | None
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None
    certified: bool = True

    @classmethod
    def from_fraction(cls, x) -> "RealRoot":
        x = Fraction(x)
        return cls(UnivariatePolynomial([-x.numerator, x.denominator]), x, x, x)

    @classmethod
    def approximate(cls, x: float, halfwidth: float = 1e-9) -> "RealRoot":
        c = Fraction(x)
        h = Fraction(halfwidth)
        return cls(None, c - h, c + h, None, certified=False)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def mid(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def bracket(self) -> Interval:
        return Interval(self.lo, self.hi)

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        if self.exact is not None:
            return f"RealRoot({self.exact})"
        return f"RealRoot(~{float(self.mid):.12g} in [{self.lo}, {self.hi}])"

    def bisect(self) -> "RealRoot":
        if self.exact is not None or self.poly is None:
            return self
        m = (self.lo + self.hi) / 2
        sm = self.poly.sign_at(m)
        if sm == 0:
            return replace(self, lo=m, hi=m, exact=m)
        if sm == self.poly.sign_at(self.lo):
            return replace(self, lo=m)
        return replace(self, hi=m)

    def refined(self, tol=DEFAULT_TOL) -> "RealRoot":
        r = self
        while r.exact is None and r.poly is not None and r.width > tol:
            r = r.bisect()
        return r

    def _detect_rational(self) -> "RealRoot":
        """Narrow until at most one candidate u/lc(poly) is left and test it.

        Any rational root u/v of an integer polynomial has v | lc, so lc*root
        is an integer.
        """
        r = self
        if r.exact is not None or r.poly is None:
            return r
        L = abs(r.poly.lc)
        while r.exact is None and r.width * L >= 1:
            r = r.bisect()
        if r.exact is not None:
            return r
        m = math.floor(r.lo * L) + 1
        if m < r.hi * L:
            x = Fraction(m) / L
            if r.poly(x) == 0:
                return replace(r, lo=x, hi=x, exact=x)
        return r

    def __neg__(self) -> "RealRoot":
        poly = self.poly.reflect().primitive() if self.poly is not None else None
        ex = -self.exact if self.exact is not None else None
        return RealRoot(poly, -self.hi, -self.lo, ex, self.certified)

    def reciprocal(self) -> "RealRoot":
        r = self
        while r.lo <= 0 <= r.hi:
            if r.exact == 0:
                raise ZeroDivisionError("reciprocal of zero")
            if r.poly is None:
                raise ZeroDivisionError("bracket contains zero")
            r = r.bisect()
        poly = r.poly.reverse().primitive() if r.poly is not None else None
        ex = 1 / r.exact if r.exact is not None else None
        return RealRoot(poly, 1 / r.hi, 1 / r.lo, ex, r.certified)

    def compare(self, other) -> int:
        """-1, 0 or 1 as self <, =, > other (a RealRoot or rational)."""
        if not isinstance(other, RealRoot):
            return self._compare_rational(Fraction(other))
        if other.exact is not None:
            return self._compare_rational(other.exact)
        if self.exact is not None:
            return -other._compare_rational(self.exact)
        if self.poly is None or other.poly is None:
            return _sign(self.mid - other.mid)
        a, b = self, other
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo <= hi:
            g = poly_gcd(a.poly, b.poly)
            if g.degree > 0 and count_real_roots(g, Interval(lo, hi)) > 0:
                return 0
        while True:
            if a.exact is not None or b.exact is not None:
                return a.compare(b)
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            a, b = a.bisect(), b.bisect()

    def _compare_rational(self, x: Fraction) -> int:
        if self.exact is not None:
            return _sign(self.exact - x)
        if x <= self.lo:
            return 1
        if x >= self.hi:
            return -1
        if self.poly is None:
            return _sign(self.mid - x)
        sx = self.poly.sign_at(x)
        if sx == 0:
            return 0
        return -1 if sx != self.poly.sign_at(self.lo) else 1

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def equals(self, other) -> bool:
        return self.compare(other) == 0


def real_max(values: Iterable[RealRoot]) -> RealRoot | None:
    best = None
    for v in values:
        if best is None or v.compare(best) > 0:
            best = v
    return best


def sort_real(values: Iterable[RealRoot]) -> list[RealRoot]:
    return sorted(values, key=cmp_to_key(lambda a, b: a.compare(b)))


@dataclass(frozen=True)
class RootInfo:
    root: RealRoot
    multiplicity: int = 1


@dataclass(frozen=True)
class RootSet:
    roots: tuple[RootInfo, ...] = ()

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __bool__(self):
        return bool(self.roots)

    @property
    def values(self) -> list[RealRoot]:
        return [r.root for r in self.roots]

    def exact_roots(self) -> list[Fraction]:
        return [r.root.exact for r in self.roots if r.root.exact is not None]


def root_bound(q: UnivariatePolynomial) -> Fraction:
    """Cauchy bound: every root has modulus below it."""
    lc = abs(q.lc)
    return 1 + max((abs(c) / lc for c in q.coeffs[:-1]), default=Fraction(0))


def _isolate_sqf(q: UnivariatePolynomial, a: Fraction, b: Fraction) -> list[RealRoot]:
    seq = sturm_sequence(q)
    q = seq[0]
    out: list[RealRoot] = []

    def exact(x):
        return RealRoot(q, x, x, x)

    if q(a) == 0:
        out.append(exact(a))
    # intervals (lo, hi] with their root counts, processed left to right
    stack = [(a, b, _variations(seq, a) - _variations(seq, b))]
    found: list[RealRoot] = []
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            if q(hi) == 0:
                found.append(exact(hi))
                continue
            while q(lo) == 0:
                m = (lo + hi) / 2
                if q(m) == 0:
                    found.append(exact(m))
                    break
                if _variations(seq, m) - _variations(seq, hi) == 1:
                    lo = m
                else:
                    hi = m
            else:
                found.append(RealRoot(q, lo, hi))
            continue
        m = (lo + hi) / 2
        vm = _variations(seq, m)
        stack.append((lo, m, _variations(seq, lo) - vm))
        stack.append((m, hi, vm - _variations(seq, hi)))
    found = [r._detect_rational() for r in found]
    out.extend(sorted(found, key=lambda r: r.lo))
    return out


def isolate_roots(q: UnivariatePolynomial, iv: Interval, tol=DEFAULT_TOL) -> RootSet:
    """All distinct real roots of q in iv, isolated, rational ones exact, others refined to ``tol``."""
    if q.is_zero():
        raise IdenticallyZero("cannot isolate roots of the zero polynomial")
    if q.degree == 0:
        return RootSet()
    tol = Fraction(tol)
    sqf = squarefree_part(q)
    roots = [r.refined(tol) for r in _isolate_sqf(sqf, iv.lo, iv.hi)]
    factors = squarefree_decomposition(q) if sqf.degree < q.degree else []
    infos = []
    for r in roots:
        mult = 1
        for f, i in factors:
            if (r.exact is not None and f(r.exact) == 0) or (
                r.exact is None and count_real_roots(f, r.bracket) > 0
            ):
                mult = i
                break
        infos.append(RootInfo(r, mult))
    return RootSet(tuple(infos))


def all_real_roots(q: UnivariatePolynomial, tol=DEFAULT_TOL) -> RootSet:
    if q.is_zero():
        raise IdenticallyZero("cannot isolate roots of the zero polynomial")
    if q.degree <= 0:
        return RootSet()
    B = root_bound(q)
    return isolate_roots(q, Interval(-B, B), tol)


def max_abs_real_root(q: UnivariatePolynomial, tol=DEFAULT_TOL) -> RealRoot | None:
    """Largest |root| over the real roots of q, or None if q has none."""
    roots = all_real_roots(q, tol).values
    if not roots:
        return None
    top, bottom = roots[-1], -roots[0]
    return bottom if bottom.compare(top) > 0 else top


def resultant(f: BivariatePolynomial, g: BivariatePolynomial, eliminate: int = 1) -> UnivariatePolynomial:
    """Sylvester resultant of f and g with respect to variable ``eliminate`` (0 or 1).

    Contents (gcd of the coefficients, a polynomial in the other variable)
    are divided out first. Raises SharedFactor if the result is still zero.
    """
    fc, gc = _primitive_part(f.coefficients(eliminate)), _primitive_part(g.coefficients(eliminate))
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        raise SharedFactor("resultant with the zero polynomial")
    bound = m * max(c.degree for c in gc) + n * max(c.degree for c in fc)
    nodes = small_nodes(max(bound, 0) + 1)
    values = []
    for x in nodes:
        fv = [c(x) for c in fc]
        gv = [c(x) for c in gc]
        values.append(det_exact(_sylvester(fv, gv)))
    res = interpolate(nodes, values)
    if res.is_zero():
        raise SharedFactor("inputs share a common factor")
    return res


def _primitive_part(coeffs: list[UnivariatePolynomial]) -> list[UnivariatePolynomial]:
    content = UnivariatePolynomial()
    for c in coeffs:
        content = poly_gcd(content, c) if not content.is_zero() else c.monic()
        if content.degree == 0:
            return coeffs
    if content.degree <= 0:
        return coeffs
    return [c // content for c in coeffs]


def _sylvester(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[list[Fraction]]:
    """Sylvester matrix for coefficient lists given low degree first (formal degrees)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fh, gh = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([Fraction(0)] * i + fh + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gh + [Fraction(0)] * (size - n - 1 - i))
    return rows


# -- rational function ranges ------------------------------------------------


@dataclass(frozen=True)
class Extremum:
    value: Interval
    at: RealRoot


@dataclass(frozen=True)
class RangeResult:
    range: Interval
    low: Extremum
    high: Extremum


def reduce_fraction(num: UnivariatePolynomial, den: UnivariatePolynomial):
    """Cancel the gcd; returns (num, den) with den monic."""
    if den.is_zero():
        return num, den
    g = poly_gcd(num, den)
    num, den = num // g, den // g
    lc = den.lc
    return num * (1 / lc), den * (1 / lc)


def _enclose(num, den, at: RealRoot, tol: Fraction) -> tuple[Interval, RealRoot]:
    if at.exact is not None:
        return Interval.point(num(at.exact) / den(at.exact)), at
    while True:
        x = at.bracket
        nv, dv = num(x), den(x)
        nv = nv if isinstance(nv, Interval) else Interval.point(nv)
        dv = dv if isinstance(dv, Interval) else Interval.point(dv)
        if not (dv.lo <= 0 <= dv.hi):
            enc = nv / dv
            if enc.width <= tol:
                return enc, at
        at = at.bisect()
        if at.exact is not None:
            return Interval.point(num(at.exact) / den(at.exact)), at


def rational_extrema(num, den, iv: Interval, tol=DEFAULT_TOL) -> RangeResult:
    """Range of num/den over iv with the points where the extremes are attained."""
    tol = Fraction(tol)
    if den.is_zero():
        if num.is_zero():
            raise ValueError("numerator and denominator are both zero")
        raise PoleInInterval(RealRoot.from_fraction(iv.lo))
    num, den = reduce_fraction(num, den)
    if den.degree > 0:
        poles = isolate_roots(den, iv, tol)
        if poles:
            raise PoleInInterval(poles.values[0])
    candidates = [RealRoot.from_fraction(iv.lo), RealRoot.from_fraction(iv.hi)]
    crit = num.derivative() * den - num * den.derivative()
    if not crit.is_zero() and crit.degree > 0:
        candidates.extend(isolate_roots(crit, iv, tol).values)
    low = high = None
    for c in candidates:
        enc, c = _enclose(num, den, c, tol)
        if low is None or enc.lo < low.value.lo:
            low = Extremum(enc, c)
        if high is None or enc.hi > high.value.hi:
            high = Extremum(enc, c)
    return RangeResult(Interval(low.value.lo, high.value.hi), low, high)


def rational_range(num, den, iv: Interval, tol=DEFAULT_TOL) -> Interval:
    return rational_extrema(num, den, iv, tol).range
