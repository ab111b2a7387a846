import json

import numpy as np
import pytest

from tiltwell import (
    ModelParams,
    SweepResult,
    detect_resonances,
    period_vs_n,
    period_vs_p,
    resonance_tilt,
    tau_vs_n,
    tilt_sweep,
    tilt_window,
    tilted_oscillation,
    tunneling_amplitude,
)
from tiltwell.dataio import write_sweep
from tiltwell.fixtures import RB87_INTERACTION_NK, RB87_ZETA


def test_empty_grid():
    params = ModelParams(n_atoms=3, hopping=0.1, interaction=1.0)
    sweep = tilt_sweep(params, [])
    assert sweep.records == []
    assert detect_resonances(sweep, 1.0) == []


def test_atom_cap_guard():
    params = ModelParams(n_atoms=13, hopping=0.1, interaction=1.0)
    with pytest.raises(ValueError, match="allow_large"):
        tilt_sweep(params, np.linspace(0.0, 1.0, 3))


def test_free_atom_sweep_matches_lorentzian():
    n = 8
    params = ModelParams(n_atoms=n, hopping=1.0)
    grid = np.linspace(0.0, 8.0, 17)
    sweep = tilt_sweep(params, grid, refine=False)
    for rec in sweep.records:
        expected = tilted_oscillation(n, 1.0, rec["tilt"]).amplitude
        assert rec["amplitude"] == pytest.approx(expected, rel=0.01)
    hits = detect_resonances(sweep, 0.0)
    assert len(hits) == 1 and hits[0].p == 0  # only the symmetric peak


def test_interacting_sweep_finds_resonances():
    u = 1.0
    params = ModelParams(n_atoms=4, hopping=0.1 * u, interaction=u)
    grid = np.linspace(0.0, 7.0 * u, 29)
    sweep = tilt_sweep(params, grid, refine=True)
    assert sweep.grid.size > grid.size  # refinement added points
    hits = detect_resonances(sweep, u)
    by_p = {h.p: h for h in hits}
    for p in (1, 2, 3):
        assert p in by_p
        hit = by_p[p]
        assert hit.amplitude == pytest.approx(4 - p, abs=0.3)
        window = tilt_window(4, p, 0.1, u).to_float()
        assert hit.offset <= window * 6.0 / 20.0  # within one refined step
        assert hit.width <= 6.0 * window
    # amplitude inside the window beats the background by far
    inside = by_p[1].amplitude
    outside = [r["amplitude"] for r in sweep.records
               if abs(r["tilt"] - 2.0 * u) > 0.5 and abs(r["tilt"] - 4.0 * u) > 0.5
               and abs(r["tilt"] - 6.0 * u) > 0.5 and r["tilt"] > 0.5]
    assert inside >= 2.0 * max(outside)


def test_detect_resonances_prominence_and_width():
    grid = np.array([0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    amps = [5.0, 0.2, 0.1, 3.9, 0.1, 0.3, 0.2]
    records = [{"tilt": t, "amplitude": a} for t, a in zip(grid, amps)]
    sweep = SweepResult(axis="tilt", grid=grid, records=records)
    hits = detect_resonances(sweep, interaction=1.5)
    assert [h.p for h in hits] == [0, 1]        # edge peak counts
    assert hits[1].tilt_peak == 3.0
    assert hits[1].offset == 0.0
    assert not hits[1].width_resolved           # single-point peak
    # a small bump below the prominence cut is ignored
    records[5]["amplitude"] = 0.55
    hits = detect_resonances(SweepResult(axis="tilt", grid=grid, records=records), 1.5)
    assert [h.p for h in hits] == [0, 1]


def test_period_vs_n_growth_and_physical_values():
    sweep = period_vs_n(0.1, range(2, 101))
    logs = sweep.column("log10_period").astype(float)
    assert np.all(np.diff(logs) > 0)  # slower for every added atom
    phys = period_vs_n(RB87_ZETA, (1, 2, 3), interaction=RB87_INTERACTION_NK, unit="nK")
    expected = {1: 466.0, 2: 4840.0, 3: 134000.0}
    for rec in phys.records:
        t = 10.0 ** rec["log10_period"]
        assert t == pytest.approx(expected[rec["n_atoms"]], rel=0.02)


def test_period_vs_n_single_point():
    sweep = period_vs_n(0.1, [5])
    assert len(sweep.records) == 1
    assert sweep.records[0]["n_atoms"] == 5


def test_period_vs_p_consistency_and_monotonicity():
    sweep = period_vs_p(0.1, (40, 70, 100))
    rows = sweep.records
    sym = {r["n_atoms"]: r for r in period_vs_n(0.1, (40, 70, 100)).records}
    for n in (40, 70, 100):
        per_n = [r for r in rows if r["n_atoms"] == n]
        assert [r["p"] for r in per_n] == list(range(n))
        assert per_n[0]["log10_period"] == pytest.approx(
            sym[n]["log10_period"], abs=1e-12
        )
        logs = [r["log10_period"] for r in per_n]
        assert all(a > b for a, b in zip(logs, logs[1:]))  # faster at higher p


def test_period_vs_p_worked_example_endpoints():
    sweep = period_vs_p(RB87_ZETA, [200], interaction=RB87_INTERACTION_NK, unit="nK")
    rows = {r["p"]: r for r in sweep.records}
    assert 10 ** rows[197]["log10_period"] == pytest.approx(117.0, rel=0.05)
    assert 10 ** rows[199]["log10_period"] == pytest.approx(33.0, rel=0.05)


def test_tau_sweep_domain_flags():
    sweep = tau_vs_n(0.1, (10,), range(10, 101, 10))
    for rec in sweep.records:
        assert rec["in_domain"] == (rec["n_atoms"] >= 50)
        if rec["n_atoms"] == 10:  # p' = N: tau = 1 exactly
            assert rec["ln_tau_exact"] == 0.0
        if rec["in_domain"]:
            assert abs(rec["ln_tau_stirling"] - rec["ln_tau_exact"]) <= 0.02 * abs(
                rec["ln_tau_exact"]
            )


def test_parallel_evaluation_is_deterministic():
    params = ModelParams(n_atoms=4, hopping=1.0)
    grid = np.linspace(0.0, 5.0, 11)
    serial = tilt_sweep(params, grid, refine=False, n_workers=1)
    parallel = tilt_sweep(params, grid, refine=False, n_workers=3)
    assert serial.records == parallel.records
    assert np.array_equal(serial.grid, parallel.grid)


def test_grid_must_increase():
    params = ModelParams(n_atoms=3, hopping=0.1, interaction=1.0)
    with pytest.raises(ValueError):
        tilt_sweep(params, [0.0, 2.0, 1.0])


def test_sweep_csv(tmp_path):
    params = ModelParams(n_atoms=3, hopping=1.0)
    sweep = tilt_sweep(params, np.linspace(0.0, 2.0, 5), refine=False)
    path = tmp_path / "sweep.csv"
    write_sweep(sweep, path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "tilt,amplitude,capped,n_samples"
    assert len(lines) == 6
    sidecar = json.loads((tmp_path / "sweep.json").read_text())
    assert sidecar["n_atoms"] == 3
    assert sidecar["grid_points"] == 5
    assert sidecar["csv"] == "sweep.csv"
    assert "generated_at" in sidecar


def test_resonant_amplitude_dominates_window_exterior():
    # on-resonance transfer beats the amplitude a few windows away by >= 2x
    u, zeta = 1.0, 0.1
    params = ModelParams(n_atoms=6, hopping=zeta * u, interaction=u)
    for p in (1, 4):
        center = resonance_tilt(p, u)
        window = tilt_window(6, p, zeta, u).to_float()
        peak = tunneling_amplitude(params.with_tilt(center)).amplitude
        for sign in (-1.0, 1.0):
            away = tunneling_amplitude(
                params.with_tilt(center + sign * 5.0 * window)
            ).amplitude
            assert peak >= 2.0 * away, (p, sign, peak, away)
