"""Parameter sweeps: tilt scans, period tables, splitting-ratio curves.

Grid points are independent work items; evaluation can fan out over a thread
pool (LAPACK and the big numpy products release the GIL) and results are
assembled by index, so parallel and serial runs produce identical output.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import analytic
from .dynamics import tunneling_amplitude
from .model import ModelParams, period_from_energy

__all__ = [
    "SweepResult",
    "ResonanceHit",
    "tilt_sweep",
    "detect_resonances",
    "period_vs_n",
    "period_vs_p",
    "tau_vs_n",
]

# ED amplitude scans get expensive fast near narrow resonances (the sampling
# contract caps at 2^20 points per tilt); keep a guard rail by default.
MAX_SCAN_ATOMS = 12

REFINE_POINTS = 21      # refined samples across +-3 suppression windows
REFINE_HALF_WINDOWS = 3.0


@dataclass(frozen=True)
class SweepResult:
    """One record per grid point plus run metadata."""

    axis: str
    grid: np.ndarray
    records: list[dict]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        if g.size != len(self.records):
            raise ValueError("one record per grid point required")
        if g.size > 1 and not np.all(np.diff(g) > 0):
            raise ValueError("grid must be strictly increasing")
        g = g.copy()
        g.flags.writeable = False
        object.__setattr__(self, "grid", g)

    def column(self, key: str) -> np.ndarray:
        return np.asarray([r[key] for r in self.records])


def _evaluate(worker: Callable, items: Sequence, n_workers: int) -> list:
    if n_workers <= 1:
        return [worker(x) for x in items]
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(worker, items))


def tilt_sweep(
    params: ModelParams,
    tilt_grid,
    refine: bool = True,
    n_workers: int = 1,
    allow_large: bool = False,
) -> SweepResult:
    """Tunneling amplitude at each tilt, from |0, N>.

    With refine=True each predicted resonance dV_p = 2pU inside the grid
    range gains a sub-grid of REFINE_POINTS samples across +-3 suppression
    windows (the window is exponentially narrow, so base grids never resolve
    the peaks on their own).  N > MAX_SCAN_ATOMS needs allow_large=True.
    """
    if params.n_atoms > MAX_SCAN_ATOMS and not allow_large:
        raise ValueError(
            f"N = {params.n_atoms} exceeds the default amplitude-scan cap "
            f"{MAX_SCAN_ATOMS}; pass allow_large=True to override"
        )
    base = np.asarray(tilt_grid, dtype=float)
    if base.size and np.any(np.diff(base) <= 0):
        raise ValueError("tilt grid must be strictly increasing")
    if base.size == 0:
        return SweepResult(
            axis="tilt", grid=base, records=[], metadata=_sweep_meta(params, base, refine)
        )

    points = [base]
    refined_at: list[float] = []
    if refine and params.interaction > 0 and params.hopping > 0:
        lo, hi = float(base[0]), float(base[-1])
        zeta = params.zeta
        for p in range(0, params.n_atoms):
            center = analytic.resonance_tilt(p, params.interaction)
            if not lo <= center <= hi:
                continue
            window = analytic.tilt_window(params.n_atoms, p, zeta, params.interaction)
            if window.sign == 0 or window.ln_magnitude < math.log(1e-300):
                continue
            w = window.to_float()
            sub = center + w * np.linspace(
                -REFINE_HALF_WINDOWS, REFINE_HALF_WINDOWS, REFINE_POINTS
            )
            points.append(np.clip(sub, lo, hi))
            refined_at.append(center)
    grid = np.unique(np.concatenate(points))

    def worker(tilt: float) -> dict:
        res = tunneling_amplitude(params.with_tilt(tilt))
        return {
            "tilt": float(tilt),
            "amplitude": res.amplitude,
            "capped": res.capped,
            "n_samples": res.n_samples,
        }

    records = _evaluate(worker, grid, n_workers)
    meta = _sweep_meta(params, base, refine)
    meta["refined_resonances"] = refined_at
    return SweepResult(axis="tilt", grid=grid, records=records, metadata=meta)


def _sweep_meta(params: ModelParams, base: np.ndarray, refine: bool) -> dict:
    return {
        "n_atoms": params.n_atoms,
        "hopping": params.hopping,
        "interaction": params.interaction,
        "unit": params.unit,
        "base_grid_points": int(base.size),
        "refine": refine,
    }


@dataclass(frozen=True)
class ResonanceHit:
    p: int
    tilt_peak: float
    amplitude: float
    offset: float        # |tilt_peak - 2pU|
    width: float         # grid interval with amplitude >= half the peak
    width_resolved: bool  # False when the peak is one grid point wide


def detect_resonances(
    sweep: SweepResult, interaction: float, prominence: float = 0.5
) -> list[ResonanceHit]:
    """Pick out amplitude peaks and match each to the nearest dV_p = 2pU.

    A peak must rise at least `prominence` atoms above its surroundings.
    Boundary maxima count (the symmetric p = 0 peak sits at the grid edge).
    A resonance narrower than the local grid spacing shows up with
    width_resolved=False rather than an inflated width.
    """
    from scipy.signal import find_peaks

    amps = sweep.column("amplitude").astype(float)
    tilts = np.asarray(sweep.grid, dtype=float)
    if amps.size == 0:
        return []
    pad = float(amps.min()) - 2.0 * prominence
    padded = np.concatenate([[pad], amps, [pad]])
    peaks, _ = find_peaks(padded, prominence=prominence)
    hits = []
    for idx in peaks - 1:
        tilt_peak = float(tilts[idx])
        amp = float(amps[idx])
        if interaction > 0:
            p = max(0, int(round(tilt_peak / (2.0 * interaction))))
            offset = abs(tilt_peak - 2.0 * p * interaction)
        else:
            p, offset = 0, abs(tilt_peak)
        half = amp / 2.0
        left = idx
        while left > 0 and amps[left - 1] >= half:
            left -= 1
        right = idx
        while right < amps.size - 1 and amps[right + 1] >= half:
            right += 1
        width = float(tilts[right] - tilts[left])
        hits.append(
            ResonanceHit(
                p=p,
                tilt_peak=tilt_peak,
                amplitude=amp,
                offset=offset,
                width=width,
                width_resolved=right > left,
            )
        )
    hits.sort(key=lambda h: h.tilt_peak)
    return hits


def period_vs_n(
    zeta: float,
    n_values,
    interaction: float = 1.0,
    unit: str = "natural",
) -> SweepResult:
    """Symmetric tunneling period per atom number, log-domain throughout."""
    ns = np.asarray(list(n_values), dtype=float)
    records = []
    for n in ns.astype(int):
        split = analytic.symmetric_splitting(int(n), zeta, interaction)
        period = period_from_energy(split, unit)
        tag = analytic.classify_regime(int(n), zeta * interaction, interaction)
        records.append(
            {
                "n_atoms": int(n),
                "log10_period": period.log10,
                "log10_splitting": split.log10,
                "regime": tag.regime.value,
            }
        )
    meta = {"zeta": zeta, "interaction": interaction, "unit": unit}
    return SweepResult(axis="n_atoms", grid=ns, records=records, metadata=meta)


def period_vs_p(
    zeta: float,
    n_values,
    interaction: float = 1.0,
    unit: str = "natural",
) -> SweepResult:
    """Resonant periods T_N^p for p = 0..N-1, one row per (N, p).

    The grid axis is a flat row index; rows are ordered by (N, p).
    """
    rows = []
    for n in n_values:
        for p in range(0, int(n)):
            split = analytic.resonant_splitting(int(n), p, zeta, interaction)
            period = period_from_energy(split, unit)
            rows.append(
                {
                    "n_atoms": int(n),
                    "p": p,
                    "log10_period": period.log10,
                    "log10_splitting": split.log10,
                }
            )
    grid = np.arange(len(rows), dtype=float)
    meta = {"zeta": zeta, "interaction": interaction, "unit": unit,
            "n_values": [int(n) for n in n_values]}
    return SweepResult(axis="row", grid=grid, records=rows, metadata=meta)


def tau_vs_n(zeta: float, p_prime_values, n_values) -> SweepResult:
    """Exact and Stirling ln(tau) versus N for each embedded-state size p'.

    Rows with N < p' are skipped (tau undefined); in_domain marks where the
    Stirling expansion is trusted (N >= 5 p').
    """
    rows = []
    for pp in p_prime_values:
        for n in n_values:
            n = int(n)
            if n < pp:
                continue
            p = n - pp
            ln_exact = analytic.ln_splitting_ratio_exact(n, p, zeta)
            ln_stirling = analytic.ln_splitting_ratio_stirling(n, pp, zeta)
            rows.append(
                {
                    "p_prime": int(pp),
                    "n_atoms": n,
                    "ln_tau_exact": ln_exact,
                    "ln_tau_stirling": ln_stirling,
                    "in_domain": analytic.stirling_in_domain(n, pp),
                }
            )
    grid = np.arange(len(rows), dtype=float)
    meta = {"zeta": zeta, "p_prime_values": [int(p) for p in p_prime_values]}
    return SweepResult(axis="row", grid=grid, records=rows, metadata=meta)
