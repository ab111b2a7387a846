"""Two-mode model of N bosons in a tilted double well.

The Hamiltonian is

    H = -J sum_{j!=j'} b_j^dag b_j'  +  U sum_j n_j (n_j - 1)  +  dV n_L

with j in {L, R}, hopping J >= 0, on-site interaction U (no conventional 1/2
factor) and tilt dV applied to the left-well occupation.  At fixed total atom
number N the Fock basis |n_L, N - n_L>, n_L = 0..N, reduces H to a real
symmetric tridiagonal (N+1) x (N+1) matrix:

    H[n, n]   = U * [n(n-1) + (N-n)(N-n-1)] + dV * n
    H[n, n+1] = -J * sqrt((n+1)(N-n))

Internally hbar = 1 and all energies share one caller-chosen unit (typically
U or J); times are in units of hbar/energy-unit.  Physical-unit conversion
(nK*k_B energies, ms times) is a thin explicit layer at the bottom.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .logscale import LogScalar

__all__ = [
    "ModelParams",
    "StateVector",
    "ValidityResult",
    "build_hamiltonian",
    "hamiltonian_bands",
    "two_mode_validity",
    "initial_state_all_right",
    "HBAR_OVER_KB_NK_MS",
    "period_from_energy",
    "energy_from_period",
    "load_params",
    "save_params",
]

_UNITS = ("natural", "nK")


@dataclass(frozen=True)
class ModelParams:
    """Physical knobs of the two-mode model.

    n_atoms:        total atom number N >= 1
    hopping:        J >= 0.  The sign of J is a gauge choice (the spectrum is
                    invariant under c_n -> (-1)^n c_n), fixed nonnegative.
    interaction:    U, on-site interaction per well (paper-free convention
                    U*n*(n-1), no 1/2)
    tilt:           dV, energy added per atom in the LEFT well; dV > 0 raises
                    the left well
    trap_frequency: optional local trap frequency omega, only used by the
                    two-mode validity check
    unit:           "natural" (hbar = 1) or "nK" (energies in nK*k_B)
    """

    n_atoms: int
    hopping: float
    interaction: float = 0.0
    tilt: float = 0.0
    trap_frequency: Optional[float] = None
    unit: str = "natural"

    def __post_init__(self):
        if not isinstance(self.n_atoms, (int, np.integer)) or self.n_atoms < 1:
            raise ValueError(f"n_atoms must be an integer >= 1, got {self.n_atoms}")
        for name in ("hopping", "interaction", "tilt"):
            v = getattr(self, name)
            if not math.isfinite(float(v)):
                raise ValueError(f"{name} must be finite, got {v}")
        if self.hopping < 0:
            raise ValueError(f"hopping must be >= 0, got {self.hopping}")
        if self.trap_frequency is not None and not self.trap_frequency > 0:
            raise ValueError(f"trap_frequency must be > 0, got {self.trap_frequency}")
        if self.unit not in _UNITS:
            raise ValueError(f"unit must be one of {_UNITS}, got {self.unit!r}")

    @property
    def dimension(self) -> int:
        return self.n_atoms + 1

    @property
    def zeta(self) -> float:
        """Barrier-height parameter zeta = J/|U| (inf for U = 0)."""
        if self.interaction == 0.0:
            return math.inf
        return self.hopping / abs(self.interaction)

    @property
    def energy_scale(self) -> float:
        """Natural energy unit: |U| when interacting, else J, else |dV| or 1."""
        if self.interaction != 0.0:
            return abs(self.interaction)
        if self.hopping != 0.0:
            return self.hopping
        return abs(self.tilt) or 1.0

    def with_tilt(self, tilt: float) -> "ModelParams":
        return replace(self, tilt=float(tilt))


@dataclass(frozen=True)
class ValidityResult:
    """Result of the two-mode validity check.

    chi is (N^2 - 1) U / (2 hbar omega); the model requires chi <~ 1 so that
    only the lowest single-particle level of each well is occupied.  When the
    trap frequency is unknown both fields are None ("validity unknown"), never
    a silent default.
    """

    chi: Optional[float]
    valid: Optional[bool]

    @property
    def known(self) -> bool:
        return self.chi is not None


def two_mode_validity(params: ModelParams) -> ValidityResult:
    """chi = (N^2 - 1) U / (2 hbar omega) and the chi <= 1 verdict."""
    if params.trap_frequency is None:
        return ValidityResult(chi=None, valid=None)
    chi = (params.n_atoms**2 - 1) * params.interaction / (2.0 * params.trap_frequency)
    return ValidityResult(chi=chi, valid=bool(chi <= 1.0))


def hamiltonian_bands(params: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and superdiagonal of the Fock-basis Hamiltonian."""
    N = params.n_atoms
    n = np.arange(N + 1, dtype=float)
    diag = params.interaction * (n * (n - 1) + (N - n) * (N - n - 1)) + params.tilt * n
    off = -params.hopping * np.sqrt((n[:-1] + 1.0) * (N - n[:-1]))
    return diag, off


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """Dense (N+1) x (N+1) Hamiltonian matrix; exactly symmetric."""
    diag, off = hamiltonian_bands(params)
    h = np.diag(diag)
    idx = np.arange(params.n_atoms)
    h[idx, idx + 1] = off
    h[idx + 1, idx] = off
    return h


@dataclass(frozen=True)
class StateVector:
    """State |psi> = sum_n c_n |n, N-n> over left-well occupation n."""

    n_atoms: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.n_atoms + 1,):
            raise ValueError(
                f"amplitudes must have shape ({self.n_atoms + 1},), got {amps.shape}"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > 1e-12:
            raise ValueError(f"state not normalized: sum |c|^2 = {norm_sq!r}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, n_atoms: int, amplitudes) -> "StateVector":
        amps = np.asarray(amplitudes, dtype=complex)
        norm = math.sqrt(float(np.sum(np.abs(amps) ** 2)))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(n_atoms, amps / norm)

    @property
    def probabilities(self) -> np.ndarray:
        """P_n = |c_n|^2, the left-well occupation distribution."""
        return np.abs(self.amplitudes) ** 2


def initial_state_all_right(n_atoms: int) -> StateVector:
    """|psi(0)> = |0, N>: every atom in the right well."""
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms}")
    amps = np.zeros(n_atoms + 1, dtype=complex)
    amps[0] = 1.0
    return StateVector(n_atoms, amps)


# ---------------------------------------------------------------------------
# physical units
# ---------------------------------------------------------------------------

# hbar/k_B in nK*ms, from hbar = 1.054571817e-34 J*s, k_B = 1.380649e-23 J/K.
# An energy of E nK*k_B corresponds to an angular frequency E/HBAR_OVER_KB_NK_MS
# in rad/ms.
HBAR_OVER_KB_NK_MS = 7.63824

_TWO_PI = 2.0 * math.pi


def _hbar_for(unit: str) -> float:
    if unit == "natural":
        return 1.0
    if unit == "nK":
        return HBAR_OVER_KB_NK_MS
    raise ValueError(f"unit must be one of {_UNITS}, got {unit!r}")


def period_from_energy(energy, unit: str = "natural"):
    """T = 2 pi hbar / E.  Floats stay floats, LogScalars stay log-domain.

    natural: E in the caller's energy unit, T in hbar/energy-unit.
    nK:      E in nK*k_B, T in ms.
    """
    factor = _TWO_PI * _hbar_for(unit)
    if isinstance(energy, LogScalar):
        if energy.sign <= 0:
            raise ValueError("period requires a positive energy")
        return LogScalar.from_float(factor) / energy
    if not energy > 0:
        raise ValueError("period requires a positive energy")
    return factor / energy


def energy_from_period(period, unit: str = "natural"):
    """Inverse of period_from_energy; the round trip is exact to rounding."""
    factor = _TWO_PI * _hbar_for(unit)
    if isinstance(period, LogScalar):
        if period.sign <= 0:
            raise ValueError("energy requires a positive period")
        return LogScalar.from_float(factor) / period
    if not period > 0:
        raise ValueError("energy requires a positive period")
    return factor / period


# ---------------------------------------------------------------------------
# parameter files
# ---------------------------------------------------------------------------

_PARAM_KEYS = {"n_atoms", "hopping", "interaction", "tilt", "trap_frequency", "unit"}


def load_params(path) -> ModelParams:
    """Read a flat JSON parameter file.

    Recognized keys: n_atoms, hopping, interaction, tilt, trap_frequency,
    unit ("natural" | "nK").  Energies under unit="nK" are in nK*k_B.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: parameter file must be a JSON object")
    unknown = set(raw) - _PARAM_KEYS
    if unknown:
        raise ValueError(f"{path}: unknown parameter keys {sorted(unknown)}")
    if "n_atoms" not in raw or "hopping" not in raw:
        raise ValueError(f"{path}: n_atoms and hopping are required")
    return ModelParams(
        n_atoms=int(raw["n_atoms"]),
        hopping=float(raw["hopping"]),
        interaction=float(raw.get("interaction", 0.0)),
        tilt=float(raw.get("tilt", 0.0)),
        trap_frequency=(
            None if raw.get("trap_frequency") is None else float(raw["trap_frequency"])
        ),
        unit=raw.get("unit", "natural"),
    )


def save_params(params: ModelParams, path) -> None:
    doc = {
        "n_atoms": params.n_atoms,
        "hopping": params.hopping,
        "interaction": params.interaction,
        "tilt": params.tilt,
        "trap_frequency": params.trap_frequency,
        "unit": params.unit,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
