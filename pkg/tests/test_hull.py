import random
from fractions import Fraction as F

import pytest

from paramreg.core import Interval, ParametricLinearSystem, ParametricMatrix, SubproblemKey, evaluate, normalize_system
from paramreg.exactla import SingularMatrix, solve_exact
from paramreg.families import consistent_system, hudak, rednumb, unit_rhs_system
from paramreg.hull import attained_value, cramer_curve, solve_hull
from paramreg.poly import UnivariatePolynomial as U
from paramreg.regularity import check_regularity

from randfam import families


def _scalar_system():
    pm = ParametricMatrix(((2,),), (((1,),),), (Interval(F(-1, 2), F(1, 2)),))
    return ParametricLinearSystem(pm, (1,), ((0,),))


def test_cramer_scalar():
    assert cramer_curve(_scalar_system(), SubproblemKey((0,), ()), 0) == (U([1]), U([2, 1]))


def test_cramer_consistent_is_constant():
    x = (F(1), F(-2), F(3, 4))
    sys_ = consistent_system(hudak(), x)
    for i in range(3):
        num, den = cramer_curve(sys_, SubproblemKey((1,), (1,)), i)
        assert den.degree == 0 and num == U([x[i]]) * den


@pytest.mark.parametrize("seed", range(3))
def test_cramer_matches_direct_solve(seed):
    rng = random.Random(seed)
    mat = lambda: tuple(tuple(F(rng.randint(-3, 3)) for _ in range(3)) for _ in range(3))  # noqa: E731
    vec = lambda: tuple(F(rng.randint(-3, 3)) for _ in range(3))  # noqa: E731
    pm = ParametricMatrix(mat(), (mat(), mat()), (Interval(-1, 1), Interval(0, 1)))
    sys_ = normalize_system(ParametricLinearSystem(pm, vec(), (vec(), vec())))
    key = SubproblemKey((0,), (1,))
    curves = [cramer_curve(sys_, key, i) for i in range(3)]
    for j in range(20):
        t = F(rng.randint(-100, 100), 100)
        p = key.full_vector(sys_.matrix.radii, [t])
        try:
            x = solve_exact(evaluate(sys_.matrix, p), sys_.rhs(p))
        except SingularMatrix:
            continue
        assert all(num(t) / den(t) == x[i] for i, (num, den) in enumerate(curves))


def test_consistent_hudak_point_hull():
    h = solve_hull(consistent_system(hudak(), (1, 1, 1)))
    assert h.status == "hull"
    assert h.hull == (Interval(1, 1),) * 3


def test_rednumb_singularity_report():
    h = solve_hull(unit_rhs_system(rednumb()))
    assert h.singular
    assert h.witness.key == SubproblemKey((1,), (1, -1))


def test_singular_center_report():
    pm = ParametricMatrix(((0,),), (((1,),),), (Interval(-1, 1),))
    h = solve_hull(ParametricLinearSystem(pm, (1,), ((0,),)))
    assert h.singular and h.witness.params == (0,)


def test_scalar_hull_exact():
    h = solve_hull(_scalar_system())
    assert h.hull == (Interval(F(2, 5), F(2, 3)),)


def _grid_inner_box(sys_, per_axis):
    pm = sys_.matrix
    lo = hi = None
    for i in range(per_axis):
        for j in range(per_axis):
            p = [iv.lo + iv.width * F(s, per_axis - 1) for iv, s in zip(pm.p, (i, j))]
            x = solve_exact(evaluate(pm, p), sys_.rhs(p))
            lo = list(x) if lo is None else [min(a, b) for a, b in zip(lo, x)]
            hi = list(x) if hi is None else [max(a, b) for a, b in zip(hi, x)]
    return lo, hi


def test_hudak_hull_contains_grid_inner_box_and_is_attained():
    sys_ = unit_rhs_system(hudak())
    h = solve_hull(sys_)
    lo, hi = _grid_inner_box(sys_, 100)
    for iv, a, b in zip(h.hull, lo, hi):
        assert iv.lo <= a and b <= iv.hi
    nsys = normalize_system(sys_)
    for iv, (att_lo, att_hi) in zip(h.hull, h.attaining):
        assert abs(attained_value(nsys, att_lo) - iv.lo) <= F(1, 10**6)
        assert abs(attained_value(nsys, att_hi) - iv.hi) <= F(1, 10**6)


def test_hull_contains_random_solutions():
    sys_ = unit_rhs_system(hudak())
    h = solve_hull(sys_)
    rng = random.Random(7)
    for _ in range(1000):
        p = [iv.lo + iv.width * F(rng.randint(0, 1000), 1000) for iv in sys_.matrix.p]
        x = solve_exact(evaluate(sys_.matrix, p), sys_.rhs(p))
        assert all(v in iv for v, iv in zip(x, h.hull))


def test_range_call_count():
    h = solve_hull(unit_rhs_system(hudak()))
    assert h.range_calls == 2 * 2 ** (2 - 1) * 3


def test_parallel_hull_identical():
    sys_ = unit_rhs_system(hudak())
    assert solve_hull(sys_) == solve_hull(sys_, workers=2)


def test_hull_regularity_consistency_random():
    for pm in families(40, seed=11):
        h = solve_hull(unit_rhs_system(pm))
        assert h.singular == (not check_regularity(pm).regular)
