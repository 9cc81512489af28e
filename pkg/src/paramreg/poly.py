"""Dense univariate and sparse bivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class UnivariatePolynomial:
    """Polynomial with exact rational coefficients, stored low degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c) -> "UnivariatePolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "UnivariatePolynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UnivariatePolynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UnivariatePolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x):
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([c * other for c in self.coeffs])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UnivariatePolynomial([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "UnivariatePolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        if len(r) < len(d):
            return UnivariatePolynomial(), UnivariatePolynomial(r)
        q = [Fraction(0)] * (len(r) - len(d) + 1)
        for i in range(len(r) - len(d), -1, -1):
            f = r[i + len(d) - 1] / lc
            q[i] = f
            if f:
                for j, c in enumerate(d):
                    r[i + j] -= f * c
        return UnivariatePolynomial(q), UnivariatePolynomial(r[: len(d) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- transformations -------------------------------------------------------
    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UnivariatePolynomial":
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    def primitive(self) -> "UnivariatePolynomial":
        """Positive rational multiple with coprime integer coefficients.

        Signs of values are preserved, which is all root isolation needs.
        """
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = gcd(*ints)
        return UnivariatePolynomial([Fraction(v // g) for v in ints])

    def reflect(self) -> "UnivariatePolynomial":
        """p(-x)."""
        return UnivariatePolynomial([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def reverse(self) -> "UnivariatePolynomial":
        """x^deg * p(1/x); roots map to their reciprocals."""
        return UnivariatePolynomial(reversed(self.coeffs))

    def scale_arg(self, s) -> "UnivariatePolynomial":
        """p(s*x)."""
        s = _frac(s)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= s
        return UnivariatePolynomial(out)


def poly_gcd(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def squarefree_part(p: UnivariatePolynomial) -> UnivariatePolynomial:
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return (p // g).primitive()


def squarefree_decomposition(p: UnivariatePolynomial) -> list[tuple[UnivariatePolynomial, int]]:
    """Yun's algorithm: p = c * prod f_i**i with the f_i square-free and coprime."""
    out = []
    if p.degree <= 0:
        return out
    a = p
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a // c
    y = b // c
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g.primitive(), i))
        w = w // g
        y = z // g
        i += 1
    return out


def interpolate(xs: Sequence, ys: Sequence) -> UnivariatePolynomial:
    """Unique polynomial of degree < len(xs) through the points (Newton form)."""
    xs = [_frac(x) for x in xs]
    coef = [_frac(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UnivariatePolynomial([coef[-1]]) if coef else UnivariatePolynomial()
    for i in range(n - 2, -1, -1):
        p = p * UnivariatePolynomial([-xs[i], 1]) + coef[i]
    return p


def small_nodes(count: int) -> list[Fraction]:
    """0, 1, -1, 2, -2, ... keeps interpolation data small."""
    out = [Fraction(0)]
    k = 1
    while len(out) < count:
        out.append(Fraction(k))
        if len(out) < count:
            out.append(Fraction(-k))
        k += 1
    return out[:count]


class BivariatePolynomial:
    """Sparse polynomial in two variables, keyed by exponent pairs (i, j) for x**i * y**j."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {
            k: _frac(v) for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[UnivariatePolynomial], var: int) -> "BivariatePolynomial":
        """Build sum_j coeffs[j] * v**j, with coefficients in the other variable."""
        terms = {}
        for j, c in enumerate(coeffs):
            for i, a in enumerate(c.coeffs):
                if a:
                    terms[(i, j) if var == 1 else (j, i)] = a
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(k[var] for k in self.terms)

    def coefficients(self, var: int) -> list[UnivariatePolynomial]:
        """Coefficients with respect to `var`, as polynomials in the other variable."""
        deg = self.degree(var)
        other = 1 - var
        buckets = [dict() for _ in range(deg + 1)]
        for k, v in self.terms.items():
            buckets[k[var]][k[other]] = v
        out = []
        for b in buckets:
            top = max(b) if b else -1
            out.append(UnivariatePolynomial([b.get(i, 0) for i in range(top + 1)]))
        return out

    def evaluate(self, var: int, value) -> UnivariatePolynomial:
        """Substitute `value` for `var`; returns a polynomial in the other variable."""
        value = _frac(value)
        acc: dict[int, Fraction] = {}
        other = 1 - var
        for k, v in self.terms.items():
            acc[k[other]] = acc.get(k[other], Fraction(0)) + v * value ** k[var]
        top = max(acc) if acc else -1
        return UnivariatePolynomial([acc.get(i, 0) for i in range(top + 1)])

    def __call__(self, x, y):
        return sum((v * _frac(x) ** i * _frac(y) ** j for (i, j), v in self.terms.items()), Fraction(0))

    def derivative(self, var: int) -> "BivariatePolynomial":
        out = {}
        for (i, j), v in self.terms.items():
            e = (i, j)[var]
            if e:
                out[(i - 1, j) if var == 0 else (i, j - 1)] = v * e
        return BivariatePolynomial(out)

    def reflect(self, var: int) -> "BivariatePolynomial":
        """Substitute -v for v."""
        return BivariatePolynomial({k: (-v if k[var] % 2 else v) for k, v in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BivariatePolynomial(out)

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        items = sorted(self.terms.items())
        return "BivariatePolynomial({" + ", ".join(f"{k}: {v}" for k, v in items) + "})"
