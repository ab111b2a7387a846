"""Eigendecomposition of the tridiagonal two-mode Hamiltonian.

Double-precision LAPACK handles every splitting down to ~1e-10 * ||H||; the
quasi-degenerate pairs of the high-barrier regime sit far below that floor,
where either the perturbative formulas (see tiltwell.analytic) take over or,
for small systems, pair_gap_highprec resolves the gap by Sturm bisection in
extended precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .logscale import LogScalar
from .model import ModelParams, hamiltonian_bands

__all__ = [
    "SpectralDecomposition",
    "eigendecompose",
    "decompose",
    "splitting_top_pair",
    "ResonantPair",
    "near_degenerate_pair_at_resonance",
    "pair_gap_highprec",
]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.eigenvalues, dtype=float)
        v = np.asarray(self.eigenvectors, dtype=float)
        if w.ndim != 1 or v.shape != (w.size, w.size):
            raise ValueError("inconsistent decomposition shapes")
        w = w.copy()
        v = v.copy()
        w.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", v)

    @property
    def dimension(self) -> int:
        return self.eigenvalues.size


def _fix_signs(v: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-|.| entry (lowest index on ties) is > 0."""
    idx = np.argmax(np.abs(v), axis=0)
    signs = np.sign(v[idx, np.arange(v.shape[1])])
    signs[signs == 0] = 1.0
    return v * signs


def _extract_bands(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if not np.array_equal(h, h.T):
        raise ValueError("matrix is not exactly symmetric")
    off = np.diag(h, 1)
    tri = np.diag(np.diag(h)) + np.diag(off, 1) + np.diag(off, -1)
    if not np.array_equal(h, tri):
        raise ValueError("matrix is not tridiagonal")
    return np.diag(h).copy(), off.copy()


def eigendecompose(h: np.ndarray) -> SpectralDecomposition:
    """Full eigensystem of a symmetric tridiagonal matrix.

    Eigenvalues ascend; eigenvector signs follow the largest-entry-positive
    convention so repeated runs are bit-identical.  LAPACK non-convergence
    surfaces as scipy.linalg.LinAlgError rather than garbage output.
    """
    diag, off = _extract_bands(h)
    w, v = scipy.linalg.eigh_tridiagonal(diag, off)
    return SpectralDecomposition(w, _fix_signs(v))


def decompose(params: ModelParams) -> SpectralDecomposition:
    """eigendecompose(build_hamiltonian(params)) without the dense detour."""
    diag, off = hamiltonian_bands(params)
    w, v = scipy.linalg.eigh_tridiagonal(diag, off)
    return SpectralDecomposition(w, _fix_signs(v))


def splitting_top_pair(decomp: SpectralDecomposition) -> float:
    """Gap E_N - E_{N-1} between the two highest eigenvalues."""
    if decomp.dimension < 2:
        raise ValueError("need at least two eigenvalues")
    return float(decomp.eigenvalues[-1] - decomp.eigenvalues[-2])


@dataclass(frozen=True)
class ResonantPair:
    """Quasi-degenerate eigenpair carrying the two-branch superposition at a
    tunneling resonance: branches |N-p, p> and |0, N>, i.e. left-well
    occupations n_L = N - p and n_L = 0."""

    index_low: int
    index_high: int
    gap: float
    branch_indices: tuple[int, int]  # (0, N - p) in n_L
    support: float                   # mean weight of the pair on the branches
    asymmetry: float                 # worst |w_a - w_b| / (w_a + w_b)
    gap_resolvable: bool             # False: gap below the double-ED floor

    @property
    def balanced(self) -> bool:
        return self.asymmetry <= 0.05


# Below this fraction of ||H|| an eigenvalue gap is LAPACK noise: the pair is
# numerically degenerate and the vectors inside the subspace are an arbitrary
# rotation of the symmetric/antisymmetric combinations.
_GAP_FLOOR = 1e-10


def near_degenerate_pair_at_resonance(
    decomp: SpectralDecomposition,
    p: int,
    support_threshold: float = 0.9,
    asymmetry_threshold: float = 0.05,
) -> Optional[ResonantPair]:
    """Locate the resonant eigenpair for tilt dV = 2 p U.

    Picks the two eigenvectors with the most weight on the branch Fock
    indices {0, N-p} and accepts them only if together they hold at least
    support_threshold of their weight there AND each is close to an equal
    (symmetric/antisymmetric) combination of the branches.  Off resonance the
    eigenstates are near-pure number states, the asymmetry check fails, and
    None is returned ("not at resonance").

    When the pair is degenerate to eigensolver precision the rotation inside
    the subspace is arbitrary, so the balance check carries no information
    and is skipped; gap_resolvable records this (the gap value itself is then
    noise -- refine it with pair_gap_highprec).
    """
    n_atoms = decomp.dimension - 1
    if not 0 <= p < n_atoms:
        raise ValueError(f"resonance order p must be in [0, N), got {p}")
    b_lo, b_hi = 0, n_atoms - p
    v = decomp.eigenvectors
    support = v[b_lo, :] ** 2 + v[b_hi, :] ** 2
    order = np.argsort(support, kind="stable")
    i, j = sorted((int(order[-1]), int(order[-2])))
    mean_support = float(0.5 * (support[i] + support[j]))
    if mean_support < support_threshold:
        return None
    gap = float(abs(decomp.eigenvalues[j] - decomp.eigenvalues[i]))
    scale = float(np.max(np.abs(decomp.eigenvalues))) or 1.0
    resolvable = gap > _GAP_FLOOR * scale
    asym = 0.0
    for k in (i, j):
        wa, wb = v[b_lo, k] ** 2, v[b_hi, k] ** 2
        asym = max(asym, abs(wa - wb) / (wa + wb))
    if resolvable and asym > asymmetry_threshold:
        return None
    return ResonantPair(
        index_low=i,
        index_high=j,
        gap=gap,
        branch_indices=(b_lo, b_hi),
        support=mean_support,
        asymmetry=asym,
        gap_resolvable=resolvable,
    )


# ---------------------------------------------------------------------------
# extended-precision gap refinement
# ---------------------------------------------------------------------------

def _sturm_count(diag, off_sq, x, tiny):
    """Number of eigenvalues strictly below x (Sturm sequence count)."""
    count = 0
    q = diag[0] - x
    if q < 0:
        count += 1
    for i in range(1, len(diag)):
        if q == 0:
            q = tiny
        q = diag[i] - x - off_sq[i - 1] / q
        if q < 0:
            count += 1
    return count


def _bisect_eigenvalue(diag, off_sq, k, lo, hi, width, tiny):
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sturm_count(diag, off_sq, mid, tiny) <= k:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def pair_gap_highprec(
    diag: np.ndarray,
    off: np.ndarray,
    k_lower: int,
    dps: int | None = None,
    max_dps: int = 400,
) -> LogScalar:
    """Gap between ascending eigenvalues k_lower and k_lower+1, resolved by
    Sturm bisection in mpmath arbitrary precision.

    Intended for the small (N <~ 20) systems whose quasi-degenerate splittings
    fall below the double-precision floor.  Precision escalates automatically
    until the gap is at least 100x the bisection resolution.
    """
    from mpmath import mp, mpf

    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = diag.size
    if not 0 <= k_lower < n - 1:
        raise ValueError(f"k_lower must be in [0, {n - 2}], got {k_lower}")

    dps = dps or 40
    while True:
        with mp.workdps(dps):
            d = [mpf(x) for x in diag]
            o2 = [mpf(x) ** 2 for x in off]
            radius = np.zeros(n)
            radius[:-1] += np.abs(off)
            radius[1:] += np.abs(off)
            lo = float(np.min(diag - radius))
            hi = float(np.max(diag + radius))
            scale = max(abs(lo), abs(hi), 1.0)
            tiny = mpf(scale) * mpf(10) ** (-2 * dps)
            width = mpf(scale) * mpf(10) ** (-(dps - 8))
            e_lo = _bisect_eigenvalue(d, o2, k_lower, mpf(lo), mpf(hi), width, tiny)
            e_hi = _bisect_eigenvalue(d, o2, k_lower + 1, mpf(lo), mpf(hi), width, tiny)
            gap = e_hi - e_lo
            if gap > 100 * width:
                return LogScalar.from_ln(float(mp.log(gap)))
        if dps >= max_dps:
            raise ArithmeticError(
                f"gap between eigenvalues {k_lower} and {k_lower + 1} not resolved "
                f"at {max_dps} digits; the pair may be exactly degenerate"
            )
        dps = min(2 * dps, max_dps)
