import random
from fractions import Fraction as F

import pytest
import sympy

from paramreg.core import Interval, ParametricMatrix, SubproblemKey, center_matrix, identity, mat_mul, normalize
from paramreg.exactla import SingularMatrix, char_polynomial, det_exact, det_pencil, det_polynomial, inverse_exact, solve_exact
from paramreg.families import hudak, rednumb
from paramreg.poly import UnivariatePolynomial as U


def rand_matrix(rng, n, lo=-5, hi=5, den=4):
    return tuple(tuple(F(rng.randint(lo * den, hi * den), rng.randint(1, den)) for _ in range(n)) for _ in range(n))


def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([r[:j] + r[j + 1 :] for r in M[1:]]) for j in range(len(M)))


def test_det_identity():
    assert det_exact(identity(3)) == 1


def test_det_rednumb_second_witness():
    from paramreg.core import evaluate

    assert det_exact(evaluate(rednumb(), (1, F(-3, 5), -1))) == 0


@pytest.mark.parametrize("seed", range(10))
def test_det_matches_cofactor_expansion(seed):
    M = rand_matrix(random.Random(seed), 4)
    assert det_exact(M) == cofactor_det(M)


def test_det_singular_rows():
    assert det_exact(((1, 2, 3), (2, 4, 6), (0, 1, 1))) == 0


def test_inverse_examples():
    assert inverse_exact(((2, 0), (0, 4))) == ((F(1, 2), 0), (0, F(1, 4)))
    C = center_matrix(hudak())
    assert mat_mul(C, inverse_exact(C)) == identity(3)
    with pytest.raises(SingularMatrix):
        inverse_exact(((1, 1), (1, 1)))


def test_solve_exact():
    rng = random.Random(3)
    M = rand_matrix(rng, 3)
    x = (F(1), F(-2, 3), F(5, 7))
    b = tuple(sum(M[i][j] * x[j] for j in range(3)) for i in range(3))
    assert solve_exact(M, b) == x


def test_det_polynomial_rednumb():
    q = det_polynomial(normalize(rednumb()), SubproblemKey.single(1, (1, -1)))
    assert q == U([F(-13, 25), F(-22, 15), -1])


def test_det_polynomial_identity_pencil():
    pm = ParametricMatrix(identity(2), (identity(2),), (Interval(-1, 1),))
    assert det_polynomial(pm, SubproblemKey.single(0, ())) == U([1, 2, 1])


@pytest.mark.parametrize("seed", range(5))
def test_det_polynomial_matches_symbolic_cofactor(seed):
    rng = random.Random(seed)
    A0, A1, A2 = (rand_matrix(rng, 3) for _ in range(3))
    pm = ParametricMatrix(A0, (A1, A2), (Interval(-1, 1), Interval(F(-1, 2), F(1, 2))))
    t = sympy.Symbol("t")
    for key in (SubproblemKey.single(0, (1,)), SubproblemKey.single(1, (-1,))):
        fixed = key.vertex_values(pm.radii)
        M = sympy.Matrix(
            3,
            3,
            lambda i, j: sympy.Rational(A0[i][j])
            + sum(sympy.Rational(v * pm.A[q][i][j]) for q, v in fixed.items())
            + t * sympy.Rational(pm.A[key.k][i][j]),
        )
        expected = sympy.Poly(M.det(), t).all_coeffs()[::-1]
        got = det_polynomial(pm, key).coeffs
        assert [F(int(c.p), int(c.q)) for c in expected] == list(got)


def test_char_polynomial_examples():
    assert char_polynomial(((0, 1), (0, 0))) == U([0, 0, 1])
    assert char_polynomial(((2, 0), (0, 3))) == U([6, -5, 1])


def faddeev_leverrier(B):
    n = len(B)
    coeffs = [F(1)]
    M = [[F(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = B M_{k-1} + c_{n-k+1} I
        M = [[sum(B[i][l] * M[l][j] for l in range(n)) + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        BM = [[sum(B[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(BM[i][i] for i in range(n)) / k)
    return coeffs[::-1]  # ascending


@pytest.mark.parametrize("seed", range(5))
def test_char_polynomial_matches_trace_recursion(seed):
    B = rand_matrix(random.Random(seed), 3)
    assert list(char_polynomial(B).coeffs) == faddeev_leverrier(B)


def test_det_pencil_degree_drop():
    # singular A1: degree below n
    assert det_pencil(identity(2), ((1, 0), (0, 0))) == U([1, 1])
