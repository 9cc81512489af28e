import random
from fractions import Fraction as F

import pytest

from paramreg.core import Interval, ParametricMatrix, evaluate, identity
from paramreg.exactla import det_exact
from paramreg.families import hudak, nilpotent, oneparam, rednumb
from paramreg.radius import RadiusKind, check_infinite_radius, regularity_radius
from paramreg.regularity import check_regularity

from randfam import random_family


def test_hudak_radius():
    r = regularity_radius(hudak())
    assert r.kind is RadiusKind.FINITE
    assert abs(float(r.value) - 1.03289) <= 1e-4


def test_rednumb_radius():
    r = regularity_radius(rednumb())
    assert abs(float(r.value) - 0.996413) <= 1e-4


def test_oneparam_radius_published_value():
    # see the decisions ledger: the slice formula gives 1.55738 here
    assert abs(float(regularity_radius(oneparam()).value) - 1.08209) <= 1e-4


def test_oneparam_radius_exact_slice_value():
    r = regularity_radius(oneparam())
    assert r.kind is RadiusKind.FINITE and r.certified
    assert abs(float(r.value) - 1.5573783) <= 1e-6


def test_nilpotent_infinite():
    assert regularity_radius(nilpotent(0)).kind is RadiusKind.INFINITE
    assert check_infinite_radius(nilpotent(0))


def test_check_infinite_radius_examples():
    assert not check_infinite_radius(hudak())
    pm = ParametricMatrix(identity(2), (((1, 0), (0, 0)),), (Interval(-1, 1),))
    assert not check_infinite_radius(pm)


def test_zero_radius_for_singular_center():
    pm = ParametricMatrix(((-2, 1), (1, -2)), (identity(2),), (Interval(2, 4),))
    r = regularity_radius(pm)
    assert r.kind is RadiusKind.ZERO and r.center_witness == (3,)


@pytest.mark.parametrize("family", [oneparam, hudak, rednumb])
def test_reciprocal_identity(family):
    r = regularity_radius(family())
    inv = r.value.reciprocal()
    assert inv.lo <= r.rho0.max.hi and r.rho0.max.lo <= inv.hi


@pytest.mark.filterwarnings("ignore:parameters")
@pytest.mark.parametrize("family", [oneparam, hudak, rednumb])
def test_witness_matrix_changes_sign(family):
    pm = family()
    w = regularity_radius(pm).witness
    assert w.validated
    d_lo = det_exact(evaluate(pm, w.params_lo, strict=False))
    d_hi = det_exact(evaluate(pm, w.params_hi, strict=False))
    assert d_lo == 0 or d_hi == 0 or (d_lo > 0) != (d_hi > 0)


@pytest.mark.parametrize("family", [oneparam, hudak, rednumb])
def test_duality_with_regularity(family):
    r = regularity_radius(family())
    regular = check_regularity(family()).regular
    assert regular == (r.value.compare(1) > 0)


def test_homogeneity_random():
    rng = random.Random(5)
    checked = 0
    while checked < 8:
        pm = random_family(rng)
        base = regularity_radius(pm)
        if base.kind is not RadiusKind.FINITE or not base.certified:
            continue
        sigma = F(rng.choice([1, 2, 3]), rng.choice([2, 3, 4]))
        scaled = regularity_radius(pm.with_radii_scaled(sigma))
        assert abs(float(scaled.value) * float(sigma) - float(base.value)) <= 1e-8 * max(1.0, float(base.value))
        checked += 1


def test_positive_perturbation_is_finite():
    for sub in (F(1, 10), F(3), F(1, 1000)):
        assert regularity_radius(nilpotent(sub)).kind is RadiusKind.FINITE


def test_negative_perturbation_stays_infinite():
    # I + t [[0,1],[c,0]] with c < 0 has eigenvalues 1 +- t sqrt(c), never real zero
    for sub in (F(-1, 10), F(-3)):
        assert regularity_radius(nilpotent(sub)).kind is RadiusKind.INFINITE
