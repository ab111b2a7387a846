"""Tilt resonances in the high-barrier regime.

For zeta = J/U << 1 a symmetric well transfers all N atoms, but only over the
astronomically long period 2*pi/dE_N.  A generic tilt freezes the dynamics
entirely -- except at the resonances dV = 2pU, where the bias is compensated
by the interaction energy of p atoms staying behind and the remaining N - p
atoms tunnel orders of magnitude faster than in the symmetric well.
"""

import math

import numpy as np

from tiltwell import (
    ModelParams,
    detect_resonances,
    ln_splitting_ratio_exact,
    tilt_sweep,
    tunneling_period,
)

N, U, zeta = 5, 1.0, 0.1
params = ModelParams(n_atoms=N, hopping=zeta * U, interaction=U)

print(f"N = {N}, zeta = {zeta}: amplitude vs tilt across the first resonances")
sweep = tilt_sweep(params, np.linspace(0.0, 10.0 * U, 51), refine=True)
hits = detect_resonances(sweep, U)
print(f"  scan of {sweep.grid.size} tilts (refined near each predicted dV_p)")
for hit in hits:
    print(
        f"  p = {hit.p}: peak at dV = {hit.tilt_peak:.6f} "
        f"(offset {hit.offset:.1e}), {hit.amplitude:.3f} atoms transfer, "
        f"FWHM ~ {hit.width:.2e}" + ("" if hit.width_resolved else " (grid-limited)")
    )

print("\nspeed-up relative to the symmetric well:")
for p in range(1, N):
    decades = -ln_splitting_ratio_exact(N, p, zeta) / math.log(10.0)
    period = tunneling_period(params.with_tilt(2.0 * p * U))
    print(f"  p = {p}: {decades:6.2f} decades faster;"
          f" T = {period.period!s} hbar/U  [{period.source}]")

sym = tunneling_period(params)
print(f"  symmetric well: T = {sym.period!s} hbar/U  [{sym.source}]")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 3), constrained_layout=True)
    ax.plot(sweep.grid / (2 * U), sweep.column("amplitude"), ".-", ms=2, lw=0.5)
    ax.set(xlabel="dV / 2U", ylabel="atoms transferred",
           title=f"tunneling resonances, N = {N}, zeta = {zeta}")
    fig.savefig("demos/03_tunneling_resonances.png", dpi=120)
    print("wrote demos/03_tunneling_resonances.png")
except ImportError:
    pass
