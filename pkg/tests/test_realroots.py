import math
import random
from fractions import Fraction as F

import numpy as np
import pytest
import sympy

from paramreg.core import Interval
from paramreg.exactla import char_polynomial
from paramreg.poly import BivariatePolynomial as B
from paramreg.poly import UnivariatePolynomial as U
from paramreg.poly import squarefree_part
from paramreg.realroots import (
    IdenticallyZero,
    PoleInInterval,
    RealRoot,
    SharedFactor,
    count_real_roots,
    isolate_roots,
    max_abs_real_root,
    rational_extrema,
    rational_range,
    resultant,
)

REDNUMB_SLICE = U([F(-13, 25), F(-22, 15), -1])


def test_count_examples():
    assert count_real_roots(U([1, 0, 1]), Interval(-2, 2)) == 0
    assert count_real_roots(REDNUMB_SLICE, Interval(-1, 1)) == 2


def test_count_identically_zero():
    with pytest.raises(IdenticallyZero):
        count_real_roots(U(), Interval(-1, 1))
    with pytest.raises(IdenticallyZero):
        isolate_roots(U(), Interval(-1, 1))


def test_count_counts_endpoint_roots():
    q = U.from_roots([-1, 1])
    assert count_real_roots(q, Interval(-1, 1)) == 2
    assert count_real_roots(q, Interval(1, 1)) == 1


def _sign_change_count(q: U, a: F, b: F, steps: int = 4000) -> int:
    """Distinct roots of a square-free q by a fine sign scan plus exact-zero hits."""
    xs = [a + (b - a) * F(i, steps) for i in range(steps + 1)]
    vals = [q(x) for x in xs]
    count = sum(1 for v in vals if v == 0)
    for i in range(steps):
        if vals[i] * vals[i + 1] < 0:
            count += 1
    return count


@pytest.mark.parametrize("seed", range(8))
def test_count_matches_sign_scan(seed):
    rng = random.Random(seed)
    roots = sorted({F(rng.randint(-40, 40), 20) for _ in range(2)})
    q = U.from_roots(roots) * U([rng.randint(1, 5), 0, 1])  # add a complex pair
    q = q * U([F(rng.randint(-9, 9), 7), 1])
    assert q.degree <= 5
    iv = Interval(-2, 2)
    assert count_real_roots(q, iv) == _sign_change_count(squarefree_part(q), iv.lo, iv.hi)


def test_isolate_rednumb_exact():
    rs = isolate_roots(REDNUMB_SLICE, Interval(-1, 1))
    assert rs.exact_roots() == [F(-13, 15), F(-3, 5)]


def test_isolate_mixed_rational():
    rs = isolate_roots(U.from_roots([F(1, 2)]) * U([1, 0, 1]), Interval(0, 1))
    assert rs.exact_roots() == [F(1, 2)]


def test_isolate_irrational_against_newton():
    tol = F(1, 10**9)
    rs = isolate_roots(U([-2, 0, 1]), Interval(0, 2), tol)
    assert len(rs) == 1
    r = rs.values[0]
    assert r.exact is None and r.width <= tol
    x = 1.5
    for _ in range(50):
        x -= (x * x - 2) / (2 * x)
    assert abs(float(r.mid) - x) <= float(tol)
    assert abs(float(r.mid) - 1.41421356) < 1e-8


def test_isolate_reports_multiplicity():
    rs = isolate_roots(U.from_roots([F(1, 3), F(1, 3), 2]), Interval(0, 3))
    assert [(i.root.exact, i.multiplicity) for i in rs] == [(F(1, 3), 2), (2, 1)]


def test_max_abs_real_root_examples():
    assert max_abs_real_root(U([1, 0, 1])) is None
    assert max_abs_real_root(U.from_roots([2, -3])).exact == 3


@pytest.mark.parametrize("seed", range(5))
def test_max_abs_real_root_symmetric_vs_eigvalsh(seed):
    rng = random.Random(seed)
    S = [[F(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            S[i][j] = S[j][i] = F(rng.randint(-20, 20), rng.randint(1, 5))
    r = max_abs_real_root(char_polynomial(tuple(map(tuple, S))))
    ev = np.linalg.eigvalsh(np.array(S, dtype=float))
    assert abs(float(r.mid) - np.abs(ev).max()) < 1e-8


def test_realroot_compare_and_reciprocal():
    sqrt2 = isolate_roots(U([-2, 0, 1]), Interval(0, 2)).values[0]
    half_sqrt2 = sqrt2.reciprocal()
    assert half_sqrt2.compare(F(7, 10)) > 0 and half_sqrt2.compare(F(71, 100)) < 0
    assert sqrt2.compare(half_sqrt2) > 0
    assert (-sqrt2).compare(0) < 0
    assert RealRoot.from_fraction(F(2, 3)).reciprocal().exact == F(3, 2)
    twin = isolate_roots(U([-4, 0, 2]), Interval(1, 2)).values[0]
    assert sqrt2.equals(twin)


def test_resultant_substitution():
    f = B({(0, 2): 1, (1, 0): -1})  # y^2 - x
    g = B({(0, 1): 1, (0, 0): -3})  # y - 3
    assert resultant(f, g, eliminate=1) == U([9, -1])


def test_resultant_shared_factor():
    f = B({(0, 2): 1, (0, 1): -2, (0, 0): 1})
    with pytest.raises(SharedFactor):
        resultant(f, f.derivative(1), eliminate=1)


def _random_bivariate(rng, dx, dy):
    return B({(i, j): rng.randint(-4, 4) for i in range(dx + 1) for j in range(dy + 1)})


@pytest.mark.parametrize("seed", range(6))
def test_resultant_specializes(seed):
    rng = random.Random(seed)
    f, g = _random_bivariate(rng, 2, 2), _random_bivariate(rng, 1, 2)
    x, y = sympy.symbols("x y")
    fs = sum(c * x**i * y**j for (i, j), c in f.terms.items())
    gs = sum(c * x**i * y**j for (i, j), c in g.terms.items())
    try:
        R = resultant(f, g, eliminate=1)
    except SharedFactor:
        assert sympy.resultant(fs, gs, y) == 0
        return
    for x0 in (F(-2), F(1, 3), F(5, 2)):
        fy, gy = f.evaluate(0, x0), g.evaluate(0, x0)
        if fy.degree != f.degree(1) or gy.degree != g.degree(1):
            continue  # leading coefficient vanished
        expected = sympy.resultant(
            sum(sympy.Rational(c) * y**j for j, c in enumerate(fy.coeffs)),
            sum(sympy.Rational(c) * y**j for j, c in enumerate(gy.coeffs)),
            y,
        )
        assert F(int(expected.p), int(expected.q)) == R(x0)


def test_rational_range_examples():
    assert rational_range(U([0, 1]), U([1]), Interval(-1, 1)) == Interval(-1, 1)
    assert rational_range(U([0, 1]), U([1, 0, 1]), Interval(-1, 1)) == Interval(F(-1, 2), F(1, 2))
    with pytest.raises(PoleInInterval):
        rational_range(U([1]), U([F(-1, 2), 1]), Interval(-1, 1))


def test_rational_range_removable_singularity():
    # (t - 1/2)/((t - 1/2)(t + 3)) has no pole in [-1, 1]
    num = U([F(-1, 2), 1])
    den = U.from_roots([F(1, 2), -3])
    r = rational_range(num, den, Interval(-1, 1))
    assert r == Interval(F(1, 4), F(1, 2))


def test_rational_extrema_irrational_critical_point():
    # t/(t^2 + 2) peaks at t = sqrt 2 with value 1/(2 sqrt 2)
    tol = F(1, 10**10)
    rr = rational_extrema(U([0, 1]), U([2, 0, 1]), Interval(0, 3), tol)
    peak = 1 / (2 * math.sqrt(2))
    assert rr.high.value.lo <= F(peak) + tol and rr.high.value.hi >= F(peak) - tol
    assert rr.high.value.width <= tol
    assert abs(float(rr.high.at.mid) - math.sqrt(2)) < 1e-8
    assert rr.low.value == Interval(0, 0)
