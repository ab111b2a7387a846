"""Closed-form and perturbative results for the tilted two-mode model.

Everything here is a formula evaluation, no diagonalization.  Quantities that
shrink like (zeta/2)^N are built directly in log space with lgamma, so the
N = 200 worked example (splittings ~ 1e-636 of the interaction energy) is as
routine as N = 2.  Each public function carries a .provenance attribute:
"exact" (closed-form result), "perturbative" (lowest order in zeta or N/zeta),
or "stirling" (asymptotic expansion).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from math import lgamma, log
from typing import Optional

from .logscale import LogScalar
from .model import period_from_energy

__all__ = [
    "Regime",
    "RegimeTag",
    "classify_regime",
    "all_right_probability",
    "TiltedOscillation",
    "tilted_oscillation",
    "tilt_suppression_threshold",
    "josephson_mean_occupation",
    "damping_times",
    "ln_binomial",
    "symmetric_splitting",
    "resonance_tilt",
    "resonant_splitting",
    "tilt_window",
    "resonant_period",
    "resonant_mean_occupation",
    "ln_splitting_ratio_exact",
    "ln_splitting_ratio_stirling",
    "stirling_in_domain",
]


# ---------------------------------------------------------------------------
# regimes
# ---------------------------------------------------------------------------

class Regime(enum.Enum):
    FOCK = "fock"            # zeta << 1: high barrier, NOON physics
    JOSEPHSON = "josephson"  # zeta/N >> 1: low barrier, damped sloshing
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class RegimeTag:
    regime: Regime
    zeta: float


# Thresholds chosen so the regimes used throughout the figures classify
# correctly; advisory only -- every formula below is evaluable anywhere.
_FOCK_ZETA_MAX = 0.2
_JOSEPHSON_ZETA_OVER_N_MIN = 5.0


def classify_regime(n_atoms: int, hopping: float, interaction: float) -> RegimeTag:
    """Tag the barrier-height regime from zeta = J/|U|."""
    zeta = math.inf if interaction == 0.0 else hopping / abs(interaction)
    if zeta <= _FOCK_ZETA_MAX:
        regime = Regime.FOCK
    elif zeta / n_atoms >= _JOSEPHSON_ZETA_OVER_N_MIN:
        regime = Regime.JOSEPHSON
    else:
        regime = Regime.INTERMEDIATE
    return RegimeTag(regime=regime, zeta=zeta)


# ---------------------------------------------------------------------------
# noninteracting dynamics (U = 0): exactly solvable
# ---------------------------------------------------------------------------

def all_right_probability(n_atoms: int, hopping: float, t: float) -> float:
    """P_0(t) = cos^{2N}(J t): probability that no atom has tunneled yet."""
    return math.cos(hopping * t) ** (2 * n_atoms)


all_right_probability.provenance = "exact"


@dataclass(frozen=True)
class TiltedOscillation:
    """Mean left-well occupation n_L(t) = A sin^2(w t / 2) for U = 0."""

    amplitude: float
    frequency: Optional[float]  # None when J = 0 with a tilt: no oscillation

    @property
    def frequency_defined(self) -> bool:
        return self.frequency is not None


def tilted_oscillation(n_atoms: int, hopping: float, tilt: float) -> TiltedOscillation:
    """Amplitude A = N / [1 + (dV/2J)^2] and frequency w = 2J sqrt(1 + (dV/2J)^2)."""
    if hopping == 0.0:
        if tilt == 0.0:
            return TiltedOscillation(amplitude=0.0, frequency=0.0)
        return TiltedOscillation(amplitude=0.0, frequency=None)
    r = tilt / (2.0 * hopping)
    amp = n_atoms / (1.0 + r * r)
    freq = 2.0 * hopping * math.sqrt(1.0 + r * r)
    return TiltedOscillation(amplitude=amp, frequency=freq)


tilted_oscillation.provenance = "exact"


def tilt_suppression_threshold(n_atoms: int, hopping: float) -> float:
    """|dV| above which fewer than one atom tunnels (U = 0): 2 J sqrt(N-1)."""
    return 2.0 * hopping * math.sqrt(n_atoms - 1.0)


tilt_suppression_threshold.provenance = "exact"


# ---------------------------------------------------------------------------
# Josephson regime (zeta/N >> 1)
# ---------------------------------------------------------------------------

def josephson_mean_occupation(
    n_atoms: int, hopping: float, interaction: float, t: float
) -> float:
    """Modulated sloshing signal (N/2) [1 - cos(2Jt) cos^{N-1}(Ut)].

    Lowest order in N/zeta: a 2J carrier under an interaction-set envelope.
    """
    return (n_atoms / 2.0) * (
        1.0 - math.cos(2.0 * hopping * t) * math.cos(interaction * t) ** (n_atoms - 1)
    )


josephson_mean_occupation.provenance = "perturbative"


def damping_times(n_atoms: int, interaction: float) -> tuple[Optional[float], float]:
    """(T_half, T_revival) of the Josephson envelope.

    T_half = (1/U) arccos(2^{-1/(N-1)}) is where the envelope first drops to
    half; it is undefined (None) for N = 1, which has no envelope.  Collapsed
    oscillations revive with period T_revival = pi/U, independent of N.
    """
    u = abs(interaction)
    if u == 0.0:
        raise ValueError("damping times require a nonzero interaction")
    t_revival = math.pi / u
    if n_atoms == 1:
        return None, t_revival
    t_half = math.acos(2.0 ** (-1.0 / (n_atoms - 1))) / u
    return t_half, t_revival


damping_times.provenance = "perturbative"


# ---------------------------------------------------------------------------
# Fock regime (zeta << 1): quasi-degenerate pair splittings, log-domain
# ---------------------------------------------------------------------------

def ln_binomial(n: int, k: int) -> float:
    """ln C(n, k) via lgamma; safe far beyond the 171! float overflow."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return lgamma(n + 1) - lgamma(k + 1) - lgamma(n - k + 1)


def symmetric_splitting(n_atoms: int, zeta: float, interaction: float) -> LogScalar:
    """Top-pair splitting dE_N = 4 U (zeta/2)^N N / (N-1)! for dV = 0.

    Lowest order in zeta; the pair are the even/odd combinations of |N,0> and
    |0,N>, and 2*pi/dE_N is the full-transfer tunneling period.
    """
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms}")
    if zeta < 0:
        raise ValueError(f"zeta must be >= 0, got {zeta}")
    if interaction <= 0:
        raise ValueError("splitting formulas assume U > 0")
    if zeta == 0.0:
        return LogScalar.zero()
    ln = (
        log(4.0 * interaction)
        + n_atoms * log(zeta / 2.0)
        + log(n_atoms)
        - lgamma(n_atoms)
    )
    return LogScalar.from_ln(ln)


symmetric_splitting.provenance = "perturbative"


def resonance_tilt(p: int, interaction: float) -> float:
    """Tilt dV_p = 2 p U at which p interacting atoms compensate the bias."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    return 2.0 * p * interaction


resonance_tilt.provenance = "exact"


def resonant_splitting(n_atoms: int, p: int, zeta: float, interaction: float) -> LogScalar:
    """Splitting of the resonant pair at dV = 2pU:

        dE_N^p = 4 U (zeta/2)^{N-p} (N-p) / (N-p-1)! * sqrt(C(N, p))

    p = 0 reduces exactly to the symmetric splitting.
    """
    if not 0 <= p < n_atoms:
        raise ValueError(f"resonance order p must satisfy 0 <= p < N, got p={p}, N={n_atoms}")
    if zeta < 0:
        raise ValueError(f"zeta must be >= 0, got {zeta}")
    if interaction <= 0:
        raise ValueError("splitting formulas assume U > 0")
    if zeta == 0.0:
        return LogScalar.zero()
    m = n_atoms - p
    ln = (
        log(4.0 * interaction)
        + m * log(zeta / 2.0)
        + log(m)
        - lgamma(m)
        + 0.5 * ln_binomial(n_atoms, p)
    )
    return LogScalar.from_ln(ln)


resonant_splitting.provenance = "perturbative"


def tilt_window(n_atoms: int, p: int, zeta: float, interaction: float) -> LogScalar:
    """Tilt deviation 2 dE_N^p / (N-p) beyond which tunneling shuts off.

    For p = 0 this is the symmetric-case tolerance 2 dE_N / N.
    """
    split = resonant_splitting(n_atoms, p, zeta, interaction)
    return split * LogScalar.from_float(2.0 / (n_atoms - p))


tilt_window.provenance = "perturbative"


def resonant_period(
    n_atoms: int, p: int, zeta: float, interaction: float, unit: str = "natural"
) -> LogScalar:
    """Tunneling period T_N^p = 2 pi / dE_N^p (ms when unit='nK')."""
    split = resonant_splitting(n_atoms, p, zeta, interaction)
    if split.sign == 0:
        raise ValueError("zero splitting: no tunneling period (zeta = 0)")
    return period_from_energy(split, unit)


resonant_period.provenance = "perturbative"


def resonant_mean_occupation(n_atoms: int, p: int, splitting, t) -> float:
    """Mean left-well occupation (N-p) sin^2(w t / 2), w = dE_N^p.

    splitting and t may be floats or LogScalars; the phase is formed in log
    space first, so T/2 of an astronomically long period still evaluates.
    """
    s = splitting if isinstance(splitting, LogScalar) else LogScalar.from_float(splitting)
    tt = t if isinstance(t, LogScalar) else LogScalar.from_float(t)
    if tt.sign == 0 or s.sign == 0:
        return 0.0
    phase = (s * tt / 2.0).to_float()
    return (n_atoms - p) * math.sin(phase) ** 2


resonant_mean_occupation.provenance = "perturbative"


# ---------------------------------------------------------------------------
# symmetric-vs-resonant splitting ratio tau = dE_N / dE_N^p
# ---------------------------------------------------------------------------

def ln_splitting_ratio_exact(n_atoms: int, p: int, zeta: float) -> float:
    """ln tau = ln dE_N - ln dE_N^p; the interaction energy cancels."""
    a = symmetric_splitting(n_atoms, zeta, 1.0)
    b = resonant_splitting(n_atoms, p, zeta, 1.0)
    return a.ln_magnitude - b.ln_magnitude


ln_splitting_ratio_exact.provenance = "exact"


def ln_splitting_ratio_stirling(n_atoms: int, p_prime: int, zeta: float) -> float:
    """Stirling expansion of ln tau in terms of p' = N - p (the atoms that
    still tunnel at the resonance):

        ln tau ~ (-ln n + 1 + ln(zeta/2)) n
               + (p'/(4n) + p'^2/(12 n^2) - ln(n)/2) p'
               + (3/2 ln p' - 3/2 + ln(4)/2 - ln zeta) p'

    with n = N.  The cross terms in the middle line are essential.  Valid for
    p' << N; see stirling_in_domain.
    """
    if not 1 <= p_prime <= n_atoms:
        raise ValueError(f"p_prime must be in [1, N], got {p_prime}")
    n = float(n_atoms)
    pp = float(p_prime)
    t_bulk = (-log(n) + 1.0 + log(zeta / 2.0)) * n
    t_cross = (pp / (4.0 * n) + pp**2 / (12.0 * n**2) - 0.5 * log(n)) * pp
    t_embed = (1.5 * log(pp) - 1.5 + 0.5 * log(4.0) - log(zeta)) * pp
    return t_bulk + t_cross + t_embed


ln_splitting_ratio_stirling.provenance = "stirling"


def stirling_in_domain(n_atoms: int, p_prime: int) -> bool:
    """Expansion domain used for validation: p' <= N/5 (and p' < N always)."""
    return 1 <= p_prime < n_atoms and n_atoms >= 5 * p_prime
