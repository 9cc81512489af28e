"""Floating-point hot loops: batched determinants over parameter grids and
sampled real spectral radii along a slice.

The determinant loop has a numba version and a pure-numpy version. Set
``PARAMREG_NO_NUMBA=1`` to force the numpy path; it is also used when numba
is not importable. Results of these kernels are screens or flagged
approximations; exact decisions are made elsewhere.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

ENV_FLAG = "PARAMREG_NO_NUMBA"


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get(ENV_FLAG, "").strip() in ("", "0")


def backend() -> str:
    return "numba" if numba_enabled() else "numpy"


# -- batched determinants ------------------------------------------------------


def _grid_dets_numpy(A0, A, P):
    M = A0[None, :, :] + np.einsum("pk,kij->pij", P, A)
    dets = np.linalg.det(M)
    scales = np.prod(np.abs(M).sum(axis=2), axis=1)
    return dets, scales


if HAVE_NUMBA:

    @njit(cache=True)
    def _grid_dets_numba(A0, A, P):  # pragma: no cover - compiled
        npts, K = P.shape
        n = A0.shape[0]
        dets = np.empty(npts)
        scales = np.empty(npts)
        M = np.empty((n, n))
        for s in range(npts):
            for i in range(n):
                for j in range(n):
                    v = A0[i, j]
                    for k in range(K):
                        v += P[s, k] * A[k, i, j]
                    M[i, j] = v
            sc = 1.0
            for i in range(n):
                r = 0.0
                for j in range(n):
                    r += abs(M[i, j])
                sc *= r
            scales[s] = sc
            det = 1.0
            for c in range(n):
                piv = c
                best = abs(M[c, c])
                for r in range(c + 1, n):
                    if abs(M[r, c]) > best:
                        best = abs(M[r, c])
                        piv = r
                if best == 0.0:
                    det = 0.0
                    break
                if piv != c:
                    for j in range(n):
                        tmp = M[c, j]
                        M[c, j] = M[piv, j]
                        M[piv, j] = tmp
                    det = -det
                d = M[c, c]
                det *= d
                for r in range(c + 1, n):
                    f = M[r, c] / d
                    if f != 0.0:
                        for j in range(c, n):
                            M[r, j] -= f * M[c, j]
            dets[s] = det
        return dets, scales


def grid_determinants(A0: np.ndarray, A: np.ndarray, P: np.ndarray):
    """Float determinants of A0 + sum_k P[s,k] A[k] and the product of row 1-norms.

    The second array scales the rounding error: values with
    |det| <= 1e-9 * scale should be recomputed exactly.
    """
    A0 = np.ascontiguousarray(A0, dtype=np.float64)
    A = np.ascontiguousarray(A, dtype=np.float64).reshape(-1, A0.shape[0], A0.shape[0])
    P = np.ascontiguousarray(P, dtype=np.float64).reshape(-1, A.shape[0])
    if numba_enabled():
        return _grid_dets_numba(A0, A, P)
    return _grid_dets_numpy(A0, A, P)


def _rho0_numpy(C, D, ts):
    M = C[None, :, :] + ts[:, None, None] * D[None, :, :]
    ev = np.linalg.eigvals(M)
    scale = np.maximum(np.abs(ev).max(axis=1, initial=0.0), 1.0)
    real = np.abs(ev.imag) <= 1e-7 * scale[:, None]
    mag = np.where(real, np.abs(ev.real), 0.0)
    idx = mag.argmax(axis=1)
    vals = mag[np.arange(len(ts)), idx]
    signs = np.where(vals > 0, np.sign(ev.real[np.arange(len(ts)), idx]), 0).astype(np.int64)
    return vals, signs


def sampled_real_rho0(C: np.ndarray, D: np.ndarray, ts: np.ndarray):
    """Largest |real eigenvalue| of C + t*D at each sample t, with its sign."""
    C = np.ascontiguousarray(C, dtype=np.float64)
    D = np.ascontiguousarray(D, dtype=np.float64)
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    # numpy only: one batched LAPACK call beats per-sample eigvals under numba
    return _rho0_numpy(C, D, ts)
