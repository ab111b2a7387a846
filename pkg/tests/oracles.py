"""Independent reference implementations used only by the tests.

Nothing here may import the code paths it checks: the Hamiltonian is
assembled state-by-state from operator matrix elements, and eigenvalues come
from characteristic-polynomial (Sturm count) bisection with dense inverse
iteration for the vectors.
"""

from __future__ import annotations

import math

import numpy as np


def hamiltonian_by_operators(n_atoms: int, hopping: float, interaction: float,
                             tilt: float) -> np.ndarray:
    """Assemble H element by element from bosonic operator rules.

    Basis |n_L, n_R> with n_R = N - n_L.  Diagonal: U[n_L(n_L-1) + n_R(n_R-1)]
    + dV n_L.  Hopping: <n_L+1, n_R-1| b_L^dag b_R |n_L, n_R> =
    sqrt((n_L+1) n_R), times -J, plus the transpose.
    """
    dim = n_atoms + 1
    h = np.zeros((dim, dim))
    for nl in range(dim):
        nr = n_atoms - nl
        h[nl, nl] = interaction * (nl * (nl - 1) + nr * (nr - 1)) + tilt * nl
        if nl + 1 <= n_atoms:
            amp = math.sqrt((nl + 1) * nr)
            h[nl + 1, nl] += -hopping * amp
            h[nl, nl + 1] += -hopping * amp
    return h


def _count_below(diag: np.ndarray, off: np.ndarray, x: float) -> int:
    """Eigenvalues of the tridiagonal matrix strictly below x (Sturm count)."""
    count = 0
    q = diag[0] - x
    if q < 0:
        count += 1
    tiny = 1e-300
    for i in range(1, diag.size):
        if q == 0.0:
            q = tiny
        q = diag[i] - x - off[i - 1] ** 2 / q
        if q < 0:
            count += 1
    return count


def sturm_eigenvalues(diag, off, tol: float = 1e-13) -> np.ndarray:
    """All eigenvalues by bisection on the Sturm count."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = diag.size
    radius = np.zeros(n)
    radius[:-1] += np.abs(off)
    radius[1:] += np.abs(off)
    lo0 = float(np.min(diag - radius))
    hi0 = float(np.max(diag + radius))
    scale = max(abs(lo0), abs(hi0), 1.0)
    out = np.empty(n)
    for k in range(n):
        lo, hi = lo0, hi0
        while hi - lo > tol * scale:
            mid = 0.5 * (lo + hi)
            if _count_below(diag, off, mid) <= k:
                lo = mid
            else:
                hi = mid
        out[k] = 0.5 * (lo + hi)
    return out


def inverse_iteration_vector(h: np.ndarray, eigenvalue: float,
                             n_steps: int = 8) -> np.ndarray:
    """Eigenvector for an isolated eigenvalue via shifted inverse iteration."""
    dim = h.shape[0]
    scale = float(np.max(np.abs(h))) or 1.0
    shifted = h - (eigenvalue + 1e-12 * scale) * np.eye(dim)
    rng = np.random.default_rng(12345)
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    for _ in range(n_steps):
        v = np.linalg.solve(shifted, v)
        v /= np.linalg.norm(v)
    return v


def binomial_pmf(n: int, q: float) -> np.ndarray:
    """Binomial occupation distribution, straight from factorial counting."""
    ks = np.arange(n + 1)
    return np.array(
        [math.comb(n, int(k)) * q**k * (1 - q) ** (n - k) for k in ks]
    )
