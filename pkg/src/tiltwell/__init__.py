"""tiltwell: N bosons in a tilted double-well trap.

Exact diagonalization of the two-mode (N+1)-dimensional Fock problem, spectral
time evolution, tunneling resonances and their log-domain analytics, and
left/right-well entanglement measures.
"""

from .analytic import (
    Regime,
    RegimeTag,
    all_right_probability,
    classify_regime,
    damping_times,
    josephson_mean_occupation,
    ln_splitting_ratio_exact,
    ln_splitting_ratio_stirling,
    resonance_tilt,
    resonant_mean_occupation,
    resonant_period,
    resonant_splitting,
    stirling_in_domain,
    symmetric_splitting,
    tilt_suppression_threshold,
    tilt_window,
    tilted_oscillation,
)
from .dynamics import (
    AmplitudeResult,
    PeriodResult,
    TimeSeries,
    evolve,
    fit_mean_oscillation,
    observables,
    trajectory,
    tunneling_amplitude,
    tunneling_period,
)
from .entanglement import (
    EntanglementReport,
    SuperpositionSize,
    entropy,
    mss_measure,
    q_measure,
    report_at_quarter_period,
    report_for_state,
    schmidt_rank,
)
from .logscale import LogScalar
from .model import (
    HBAR_OVER_KB_NK_MS,
    ModelParams,
    StateVector,
    ValidityResult,
    build_hamiltonian,
    energy_from_period,
    hamiltonian_bands,
    initial_state_all_right,
    load_params,
    period_from_energy,
    save_params,
    two_mode_validity,
)
from .scan import (
    ResonanceHit,
    SweepResult,
    detect_resonances,
    period_vs_n,
    period_vs_p,
    tau_vs_n,
    tilt_sweep,
)
from .spectrum import (
    ResonantPair,
    SpectralDecomposition,
    decompose,
    eigendecompose,
    near_degenerate_pair_at_resonance,
    pair_gap_highprec,
    splitting_top_pair,
)

__version__ = "0.1.0"
