"""Canonical parameter sets for the bundled figures and the Rb-87 example.

Every figure command and the physical-unit acceptance checks read from here,
so the numbers live in exactly one place.
"""

from __future__ import annotations

from .model import ModelParams

# --- Rb-87 double-well example -------------------------------------------
# 200 atoms in a trap with barrier parameter zeta = 0.0964.  The interaction
# energy is fixed by requiring the p = 197 resonance tilt 2*197*U to equal
# 210 nK*k_B, giving U = 210/394 nK*k_B; the hopping follows from zeta.
RB87_N_ATOMS = 200
RB87_ZETA = 0.0964
RB87_INTERACTION_NK = 0.53299
RB87_HOPPING_NK = RB87_ZETA * RB87_INTERACTION_NK


def rb87_params(tilt_nk: float = 0.0) -> ModelParams:
    return ModelParams(
        n_atoms=RB87_N_ATOMS,
        hopping=RB87_HOPPING_NK,
        interaction=RB87_INTERACTION_NK,
        tilt=tilt_nk,
        unit="nK",
    )


# --- figure 1: noninteracting atoms, tilt-suppressed sloshing -------------
# N = 100 free atoms with dV = 2J: only half of them transfer.
FIG1_N_ATOMS = 100
FIG1_HOPPING = 1.0
FIG1_TILT_OVER_HOPPING = 2.0
FIG1_TILT_GRID_MAX_OVER_2J = 12.0   # past the sqrt(N-1) suppression point
FIG1_TILT_GRID_POINTS = 241
FIG1_DENSITY_PERIODS = 2.0
FIG1_DENSITY_SAMPLES = 241


def fig1_params() -> ModelParams:
    return ModelParams(
        n_atoms=FIG1_N_ATOMS,
        hopping=FIG1_HOPPING,
        interaction=0.0,
        tilt=FIG1_TILT_OVER_HOPPING * FIG1_HOPPING,
    )


# --- figure 2: weak interactions, damped sloshing with revivals -----------
# N = 10 with zeta/N = 10 (J = 100 U): collapse at T_half, revival at pi/U.
FIG2_N_ATOMS = 10
FIG2_INTERACTION = 1.0
FIG2_ZETA_OVER_N = 10.0
FIG2_DENSITY_CARRIER_PERIODS = 3.0
FIG2_DENSITY_SAMPLES = 301
FIG2_OBS_REVIVALS = 1.25            # cover the first revival window
FIG2_OBS_SAMPLES = 6001


def fig2_params() -> ModelParams:
    hopping = FIG2_ZETA_OVER_N * FIG2_N_ATOMS * FIG2_INTERACTION
    return ModelParams(
        n_atoms=FIG2_N_ATOMS, hopping=hopping, interaction=FIG2_INTERACTION
    )


# --- figure 3: high barrier, resonances in a few-atom system --------------
# densities for N = 7 at zeta = 0.1 (symmetric and at the p = 2 resonance),
# amplitude-vs-tilt scan for N = 5.
FIG3_N_ATOMS_DENSITY = 7
FIG3_RESONANCE_P = 2
FIG3_N_ATOMS_SCAN = 5
FIG3_ZETA = 0.1
FIG3_INTERACTION = 1.0
FIG3_DENSITY_PERIODS = 1.0
FIG3_DENSITY_SAMPLES = 201
FIG3_SCAN_MAX_OVER_2U = 5.0
FIG3_SCAN_POINTS = 51
FIG3_ZOOM_P = 2                     # detail data around the second resonance


def fig3_density_params(resonance_p: int = 0) -> ModelParams:
    u = FIG3_INTERACTION
    return ModelParams(
        n_atoms=FIG3_N_ATOMS_DENSITY,
        hopping=FIG3_ZETA * u,
        interaction=u,
        tilt=2.0 * resonance_p * u,
    )


def fig3_scan_params() -> ModelParams:
    u = FIG3_INTERACTION
    return ModelParams(
        n_atoms=FIG3_N_ATOMS_SCAN, hopping=FIG3_ZETA * u, interaction=u
    )


# --- figure 4: embedded-superposition speedup ------------------------------
FIG4_ZETA = 0.1
FIG4_P_PRIMES = (10, 50, 100)
FIG4_N_MAX_FACTOR = 10              # curves run N = p' .. 10 p'


# --- figure 5: period growth with atom number ------------------------------
FIG5_ZETA = 0.1
FIG5_N_RANGE = (2, 100)
FIG5_P_CURVES_N = (40, 50, 60, 70, 80, 90, 100)
