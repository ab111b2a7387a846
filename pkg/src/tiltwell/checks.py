"""Cross-validation suite behind the `check` CLI command.

Each check compares an independent route against the simulation stack:
closed-form noninteracting dynamics vs spectral propagation, perturbative
splittings vs extended-precision eigenvalue gaps, conservation laws on a
seeded random parameter grid.  Tolerances are fixed here; --strict halves
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import analytic, fixtures
from .dynamics import trajectory
from .model import (
    ModelParams,
    StateVector,
    hamiltonian_bands,
    initial_state_all_right,
    period_from_energy,
)
from .spectrum import decompose, near_degenerate_pair_at_resonance, pair_gap_highprec

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str


def _result(name: str, worst: float, tol: float, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=worst <= tol, worst=worst, tolerance=tol,
                       detail=detail)


def check_noninteracting(tighten: float = 1.0) -> CheckResult:
    """Spectral propagation vs P_0 = cos^{2N}(Jt) for free atoms."""
    worst = 0.0
    for n in (1, 10, 50):
        params = ModelParams(n_atoms=n, hopping=1.0)
        period = math.pi
        ts = np.linspace(0.0, 2.0 * period, 40)
        series = trajectory(params, initial_state_all_right(n), ts)
        exact = np.array([analytic.all_right_probability(n, 1.0, t) for t in ts])
        worst = max(worst, float(np.max(np.abs(series.probabilities[:, 0] - exact))))
    return _result("noninteracting P0 vs closed form", worst, 1e-10 * tighten)


def check_symmetric_splittings(tighten: float = 1.0, n_max: int = 10) -> CheckResult:
    """Top-pair gap from extended-precision ED vs the (zeta/2)^N formula.

    Relative disagreement must stay below 3 zeta^2 (the size of the first
    neglected perturbative order).
    """
    worst_ratio = 0.0
    detail = ""
    for zeta in (0.05, 0.1):
        tol = 3.0 * zeta**2 * tighten
        for n in range(1, n_max + 1):
            params = ModelParams(n_atoms=n, hopping=zeta, interaction=1.0)
            diag, off = hamiltonian_bands(params)
            gap = pair_gap_highprec(diag, off, n - 1)
            formula = analytic.symmetric_splitting(n, zeta, 1.0)
            rel = abs(math.expm1(gap.ln_magnitude - formula.ln_magnitude))
            if rel / tol > worst_ratio:
                worst_ratio = rel / tol
                detail = f"worst at N={n}, zeta={zeta}: rel {rel:.3e} vs tol {tol:.3e}"
    return _result("symmetric splitting ED vs formula", worst_ratio, 1.0, detail)


def check_resonant_splittings(tighten: float = 1.0, n_max: int = 10) -> CheckResult:
    """Resonant-pair gap vs the degenerate-perturbation formula (10%)."""
    worst = 0.0
    detail = ""
    for zeta in (0.05, 0.1):
        for n in range(3, n_max + 1):
            for p in range(1, n - 1):
                params = ModelParams(
                    n_atoms=n, hopping=zeta, interaction=1.0, tilt=2.0 * p
                )
                decomp = decompose(params)
                pair = near_degenerate_pair_at_resonance(decomp, p)
                if pair is None:
                    return CheckResult(
                        "resonant splitting ED vs formula", False, math.inf, 0.10,
                        f"no resonant pair found at N={n}, p={p}, zeta={zeta}",
                    )
                diag, off = hamiltonian_bands(params)
                gap = pair_gap_highprec(diag, off, pair.index_low)
                formula = analytic.resonant_splitting(n, p, zeta, 1.0)
                rel = abs(math.expm1(gap.ln_magnitude - formula.ln_magnitude))
                if rel > worst:
                    worst = rel
                    detail = f"worst at N={n}, p={p}, zeta={zeta}"
    return _result("resonant splitting ED vs formula", worst, 0.10 * tighten, detail)


def check_eigensystem_quality(tighten: float = 1.0) -> CheckResult:
    """Orthonormality and reconstruction residuals on a seeded random grid."""
    rng = np.random.default_rng(20240915)
    worst = 0.0
    for _ in range(40):
        n = int(rng.integers(1, 13))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0.0, 3.0)),
            interaction=float(rng.uniform(-2.0, 2.0)),
            tilt=float(rng.uniform(-5.0, 5.0)),
        )
        decomp = decompose(params)
        v = decomp.eigenvectors
        ortho = float(np.max(np.abs(v.T @ v - np.eye(n + 1))))
        diag, off = hamiltonian_bands(params)
        h = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        recon = v @ np.diag(decomp.eigenvalues) @ v.T
        scale = float(np.max(np.abs(h))) or 1.0
        rec = float(np.max(np.abs(recon - h))) / scale
        worst = max(worst, ortho, rec)
    return _result("orthonormality / reconstruction", worst, 1e-10 * tighten)


def check_conservation(tighten: float = 1.0) -> CheckResult:
    """Norm and energy drift along random trajectories."""
    rng = np.random.default_rng(7041776)
    worst = 0.0
    for _ in range(25):
        n = int(rng.integers(1, 13))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0.05, 2.0)),
            interaction=float(rng.uniform(-1.5, 1.5)),
            tilt=float(rng.uniform(-4.0, 4.0)),
        )
        ts = np.linspace(0.0, float(rng.uniform(5.0, 40.0)), 31)
        series = trajectory(params, initial_state_all_right(n), ts)
        norm_err = float(np.max(np.abs(series.probabilities.sum(axis=1) - 1.0)))
        diag, off = hamiltonian_bands(params)
        h = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        decomp = decompose(params)
        a = decomp.eigenvectors.T @ initial_state_all_right(n).amplitudes
        energies = []
        for t in ts[:: max(1, len(ts) // 6)]:
            amps = decomp.eigenvectors @ (a * np.exp(-1j * decomp.eigenvalues * t))
            energies.append(float(np.real(np.conj(amps) @ (h @ amps))))
        # the conserved energy can be exactly zero; scale by the spectrum
        scale = max(max(abs(e) for e in energies),
                    float(np.max(np.abs(decomp.eigenvalues))), 1e-300)
        energy_err = (max(energies) - min(energies)) / scale
        worst = max(worst, norm_err, energy_err)
    return _result("norm / energy conservation", worst, 1e-10 * tighten)


def check_mirror_symmetry(tighten: float = 1.0) -> CheckResult:
    """dV = 0: evolution from |0,N> mirrors evolution from |N,0>."""
    rng = np.random.default_rng(1905)
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(1, 13))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0.05, 2.0)),
            interaction=float(rng.uniform(-1.5, 1.5)),
        )
        ts = np.linspace(0.0, float(rng.uniform(3.0, 30.0)), 17)
        fwd = trajectory(params, initial_state_all_right(n), ts)
        amps = np.zeros(n + 1, dtype=complex)
        amps[-1] = 1.0
        rev = trajectory(params, StateVector(n, amps), ts)
        worst = max(
            worst,
            float(np.max(np.abs(fwd.probabilities - rev.probabilities[:, ::-1]))),
        )
    return _result("tilt-free mirror symmetry", worst, 1e-10 * tighten)


def check_binomial_separability(tighten: float = 1.0) -> CheckResult:
    """U = 0: the full distribution stays binomial with q = mean/N."""
    from scipy.stats import binom

    rng = np.random.default_rng(2718)
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(1, 13))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0.05, 2.0)),
            tilt=float(rng.uniform(-3.0, 3.0)),
        )
        ts = np.linspace(0.0, float(rng.uniform(3.0, 20.0)), 25)
        series = trajectory(params, initial_state_all_right(n), ts)
        q = np.clip(series.mean / n, 0.0, 1.0)
        expected = binom.pmf(np.arange(n + 1)[None, :], n, q[:, None])
        worst = max(worst, float(np.max(np.abs(series.probabilities - expected))))
    return _result("noninteracting binomial distribution", worst, 1e-8 * tighten)


def check_worked_example(tighten: float = 1.0) -> CheckResult:
    """Physical-unit periods and windows of the Rb-87 example."""
    zeta = fixtures.RB87_ZETA
    u = fixtures.RB87_INTERACTION_NK
    worst = 0.0
    # few-atom symmetric periods, 2%
    for n, t_ms in ((1, 466.0), (2, 4840.0), (3, 134000.0)):
        period = period_from_energy(analytic.symmetric_splitting(n, zeta, u), "nK")
        worst = max(worst, abs(period.to_float() - t_ms) / t_ms / 0.02)
    # resonant periods, 5%
    for p, t_ms in ((197, 117.0), (198, 34.3), (199, 33.0)):
        period = analytic.resonant_period(fixtures.RB87_N_ATOMS, p, zeta, u, "nK")
        worst = max(worst, abs(period.to_float() - t_ms) / t_ms / 0.05)
    # resonance tilts, 1%
    for p, dv in ((197, 210.0), (198, 211.0), (199, 212.0)):
        worst = max(worst, abs(analytic.resonance_tilt(p, u) - dv) / dv / 0.01)
    # windows, 5%
    for p, w_nk in ((197, 0.273), (198, 1.40), (199, 2.90)):
        w = analytic.tilt_window(fixtures.RB87_N_ATOMS, p, zeta, u).to_float()
        worst = max(worst, abs(w - w_nk) / w_nk / 0.05)
    # log-domain symmetric period and window
    t200 = period_from_energy(
        analytic.symmetric_splitting(fixtures.RB87_N_ATOMS, zeta, u), "nK"
    )
    worst = max(worst, abs(t200.log10 - 635.06) / 0.1)
    w200 = analytic.tilt_window(fixtures.RB87_N_ATOMS, 0, zeta, u)
    worst = max(worst, abs(w200.log10 - (-635.4)) / 0.2)
    return _result("Rb-87 worked-example numbers", worst, 1.0 * tighten,
                   "normalized to each quantity's tolerance")


def check_stirling(tighten: float = 1.0) -> CheckResult:
    """Stirling ln(tau) vs exact, sampled across the trusted domain."""
    worst = 0.0
    for pp in (10, 50, 100):
        for n in range(5 * pp, 10 * pp + 1, max(1, pp // 4)):
            exact = analytic.ln_splitting_ratio_exact(n, n - pp, 0.1)
            approx = analytic.ln_splitting_ratio_stirling(n, pp, 0.1)
            worst = max(worst, abs(approx - exact) / abs(exact))
    return _result("Stirling expansion of ln tau", worst, 0.02 * tighten)


ALL_CHECKS = (
    check_noninteracting,
    check_symmetric_splittings,
    check_resonant_splittings,
    check_eigensystem_quality,
    check_conservation,
    check_mirror_symmetry,
    check_binomial_separability,
    check_worked_example,
    check_stirling,
)


def run_checks(strict: bool = False) -> list[CheckResult]:
    tighten = 0.5 if strict else 1.0
    return [check(tighten) for check in ALL_CHECKS]
