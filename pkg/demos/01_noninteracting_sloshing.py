"""Free atoms sloshing between two wells, and how a tilt shuts them down.

With no interactions every atom tunnels independently: starting from all N
atoms in the right well, the return probability is cos^{2N}(Jt) and the mean
left-well occupation swings between 0 and N with period pi/J.  A tilt dV
reduces the swing to N/[1 + (dV/2J)^2] while speeding the oscillation up --
past |dV| = 2J sqrt(N-1) not even one atom makes it across.
"""

import math

import numpy as np

from tiltwell import (
    ModelParams,
    all_right_probability,
    initial_state_all_right,
    tilt_suppression_threshold,
    tilted_oscillation,
    trajectory,
    tunneling_amplitude,
)

N = 100
J = 1.0

params = ModelParams(n_atoms=N, hopping=J, tilt=2.0 * J)
osc = tilted_oscillation(N, J, params.tilt)
period = 2.0 * math.pi / osc.frequency
ts = np.linspace(0.0, 2.0 * period, 400)
series = trajectory(params, initial_state_all_right(N), ts)

print(f"N = {N} free atoms, tilt dV = 2J")
print(f"  predicted swing  A = {osc.amplitude:.2f} atoms")
print(f"  observed  max(n_L) = {series.mean.max():.2f} atoms")
print(f"  oscillation period = {period:.4f} hbar/J (vs pi/J = {math.pi:.4f} untilted)")

check = trajectory(
    ModelParams(n_atoms=N, hopping=J), initial_state_all_right(N), ts
)
worst = np.max(np.abs(check.probabilities[:, 0] - np.cos(ts) ** (2 * N)))
print(f"  symmetric-well P0 vs cos^(2N)(Jt): max |err| = {worst:.2e}")
assert all_right_probability(N, J, 0.0) == 1.0

print("\ntilt response:")
for dv_over_2j in (0.0, 0.5, 1.0, 3.0, 9.95, 10.5):
    dv = dv_over_2j * 2.0 * J
    amp = tunneling_amplitude(params.with_tilt(dv)).amplitude
    print(f"  dV = {dv_over_2j:5.2f} x 2J  ->  {amp:7.2f} atoms transfer")
threshold = tilt_suppression_threshold(N, J)
print(f"full suppression beyond dV = 2J sqrt(N-1) = {threshold:.2f} J")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.2), constrained_layout=True)
    ax0.imshow(
        series.probabilities.T, origin="lower", aspect="auto",
        extent=[ts[0], ts[-1], 0, N], cmap="magma",
    )
    ax0.set(xlabel="t  [hbar/J]", ylabel="n_L", title="P(n_L, t) at dV = 2J")
    dvs = np.linspace(0.0, 12.0 * 2 * J, 200)
    ax1.plot(dvs / (2 * J), [tilted_oscillation(N, J, d).amplitude for d in dvs])
    ax1.axvline(threshold / (2 * J), ls="--", c="k", lw=0.8)
    ax1.set(xlabel="dV / 2J", ylabel="atoms transferred", title="tilt suppression")
    fig.savefig("demos/01_noninteracting_sloshing.png", dpi=120)
    print("wrote demos/01_noninteracting_sloshing.png")
except ImportError:
    pass
