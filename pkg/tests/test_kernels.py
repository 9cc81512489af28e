import numpy as np
import pytest

from paramreg import _kernels
from paramreg.families import hudak, rednumb
from paramreg.oracle import grid_scan


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    if request.param == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    monkeypatch.setenv(_kernels.ENV_FLAG, "0" if request.param == "numba" else "1")
    assert _kernels.backend() == request.param
    return request.param


def test_grid_determinants_match_numpy(backend):
    rng = np.random.default_rng(0)
    A0 = rng.normal(size=(3, 3))
    A = rng.normal(size=(2, 3, 3))
    P = rng.uniform(-1, 1, (500, 2))
    dets, scales = _kernels.grid_determinants(A0, A, P)
    M = A0 + np.einsum("pk,kij->pij", P, A)
    np.testing.assert_allclose(dets, np.linalg.det(M), rtol=1e-10, atol=1e-12)
    assert np.all(np.abs(dets) <= scales * (1 + 1e-12))


def test_sampled_rho0():
    C = np.diag([2.0, -3.0])
    D = np.array([[0.0, 1.0], [-1.0, 0.0]])
    vals, signs = _kernels.sampled_real_rho0(C, D, np.array([0.0]))
    assert vals[0] == 3.0 and signs[0] == -1
    vals, _ = _kernels.sampled_real_rho0(np.zeros((2, 2)), D, np.array([1.0]))
    assert vals[0] == 0.0


def test_grid_scan_backend_independent(backend):
    assert grid_scan(hudak(), 9) == []
    assert len(grid_scan(rednumb(), 9)) == 4
