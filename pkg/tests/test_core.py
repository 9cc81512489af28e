import random
from fractions import Fraction as F

import pytest

from paramreg.core import (
    Interval,
    OutsideBox,
    ParametricLinearSystem,
    ParametricMatrix,
    SubproblemKey,
    as_fraction,
    center_matrix,
    evaluate,
    identity,
    normalize,
    normalize_system,
    sign_vectors,
)
from paramreg.exactla import det_exact
from paramreg.families import hudak, oneparam, rednumb

ZERO2 = ((0, 0), (0, 0))


def test_evaluate_rednumb_witness_is_singular():
    assert det_exact(evaluate(rednumb(), (1, F(-13, 15), -1))) == 0


def test_evaluate_hudak_center_diagonal():
    M = evaluate(hudak(), (36, 33))
    assert (M[0][0], M[1][1], M[2][2]) == (36, 36, 33)


def test_evaluate_zero_dependency_returns_A0():
    pm = ParametricMatrix(((1, 2), (3, 4)), (ZERO2,), (Interval(-1, 1),))
    assert evaluate(pm, (F(1, 2),)) == ((1, 2), (3, 4))


def test_evaluate_outside_box():
    with pytest.raises(OutsideBox):
        evaluate(hudak(), (30, 33))
    with pytest.warns(UserWarning):
        evaluate(hudak(), (30, 33), strict=False)


def test_evaluate_dimension_mismatch():
    with pytest.raises(ValueError):
        evaluate(hudak(), (36,))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.1)


def test_center_matrix_examples():
    assert center_matrix(oneparam()) == ((1, 0, -1), (0, 1, 0), (-1, 0, 0))
    assert center_matrix(hudak()) == ((36, -43, 49), (-31, 36, -35), (25, -35, 33))
    pm = ParametricMatrix(identity(2), (ZERO2,), (Interval(-1, 1),))
    assert center_matrix(pm) == identity(2)


def test_normalize_hudak():
    pm = normalize(hudak())
    assert pm.p == (Interval(-5, 5), Interval(-5, 5))
    assert pm.A0 == center_matrix(hudak())
    assert pm.to_original((5, -5)) == (41, 28)


def test_normalize_is_idempotent_on_centered():
    pm = oneparam()
    assert normalize(pm) == pm
    assert normalize(normalize(hudak())) == normalize(hudak())


def test_normalize_folds_degenerate_parameter():
    rng = random.Random(1)
    mat = lambda: tuple(tuple(F(rng.randint(-3, 3)) for _ in range(3)) for _ in range(3))  # noqa: E731
    pm = ParametricMatrix(mat(), (mat(), mat(), mat()), (Interval(0, 1), Interval(2, 2), Interval(-1, 3)))
    npm = normalize(pm)
    assert npm.K == 2
    for _ in range(100):
        q = [npm.p[k].lo + npm.p[k].width * F(rng.randint(0, 64), 64) for k in range(2)]
        assert evaluate(npm, q) == evaluate(pm, npm.to_original(q))


def test_normalize_system_shifts_rhs():
    sys_ = ParametricLinearSystem(hudak(), (1, 0, 0), ((1, 1, 1), (0, 0, 2)))
    n = normalize_system(sys_)
    assert n.b0 == (37, 36, 36 + 66)
    assert n.rhs((0, 0)) == sys_.rhs((36, 33))


def test_subproblem_key_vectors():
    key = SubproblemKey.single(1, (1, -1))
    assert key.full_vector((F(1), F(2), F(3)), [F(1, 2)]) == (1, F(1, 2), -3)
    assert key.label() == "k=2 eps=(+1,-1)"


def test_sign_vectors_order():
    assert sign_vectors(2) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert sign_vectors(0) == [()]


def test_interval_arithmetic():
    a, b = Interval(-1, 2), Interval(3, 4)
    assert a + b == Interval(2, 6)
    assert a * b == Interval(-4, 8)
    assert (b / Interval(1, 2)) == Interval(F(3, 2), 4)
    with pytest.raises(ZeroDivisionError):
        b / a
