"""Command-line interface.

Subcommands:
    simulate   trajectory CSVs plus a quarter-period entanglement report
    figure     canned data sets (CSV + manifest) for the five bundled figures
    design     physical-unit resonance table for planning an experiment
    check      analytic-vs-ED cross-validation suite

Exit codes: 0 success, 1 validation failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import analytic, checks, dataio, fixtures
from .dynamics import trajectory, tunneling_period
from .entanglement import report_at_quarter_period
from .logscale import LogScalar
from .model import (
    HBAR_OVER_KB_NK_MS,
    ModelParams,
    initial_state_all_right,
    load_params,
    period_from_energy,
)
from .scan import period_vs_n, period_vs_p, tau_vs_n, tilt_sweep


def _bad_args(message: str) -> SystemExit:
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(2)


def _params_from_args(args) -> ModelParams:
    if args.params:
        return load_params(args.params)
    if args.n_atoms is None:
        raise _bad_args("either --params or -N/--n-atoms is required")
    u = 1.0 if args.interaction is None else args.interaction
    if args.zeta is not None:
        if u == 0.0:
            raise _bad_args("--zeta needs a nonzero interaction")
        hopping = args.zeta * abs(u)
    elif args.zeta_over_n is not None:
        if u == 0.0:
            raise _bad_args("--zeta-over-N needs a nonzero interaction")
        hopping = args.zeta_over_n * args.n_atoms * abs(u)
    elif args.hopping is not None:
        hopping = args.hopping
    else:
        hopping = 1.0
    tilt = 0.0
    if args.resonance_p is not None:
        tilt = analytic.resonance_tilt(args.resonance_p, u)
    elif args.tilt_over_j is not None:
        tilt = args.tilt_over_j * hopping
    elif args.tilt is not None:
        tilt = args.tilt
    return ModelParams(
        n_atoms=args.n_atoms,
        hopping=hopping,
        interaction=u,
        tilt=tilt,
        unit=args.unit,
    )


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def _time_display(params: ModelParams) -> tuple[float, str]:
    """Display-time factor and label: t_out = t_internal * factor.

    Natural mode reports times in hbar/U (hbar/J for free atoms); physical
    nK mode reports milliseconds.
    """
    if params.unit == "nK":
        return HBAR_OVER_KB_NK_MS, "ms"
    if params.interaction != 0.0:
        return abs(params.interaction), "hbar/U"
    if params.hopping != 0.0:
        return params.hopping, "hbar/J"
    return 1.0, "hbar/energy-unit"


def cmd_simulate(args) -> int:
    params = _params_from_args(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    factor, time_unit = _time_display(params)

    if args.t_max is not None:
        t_max = args.t_max  # in display units
    else:
        try:
            t_max = 2.0 * tunneling_period(params).period.to_float() * factor
        except OverflowError:
            raise _bad_args(
                "tunneling period too large to represent; pass --t-max explicitly"
            )
    ts_display = np.linspace(0.0, t_max, args.t_steps)
    series = trajectory(
        params, initial_state_all_right(params.n_atoms), ts_display / factor
    )
    out_series = dataclasses.replace(series, times=ts_display)
    dataio.write_timeseries_distribution(out_series, out / "distribution.csv")
    dataio.write_timeseries_observables(out_series, out / "observables.csv")

    try:
        report = report_at_quarter_period(params).to_dict()
        report["time"] *= factor
        report["time_unit"] = time_unit
    except OverflowError:
        report = {"error": "period not representable in double precision"}
    with open(out / "entanglement.json", "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")

    dataio.write_manifest(
        out / "manifest.json",
        {
            "command": "simulate",
            "params": {
                "n_atoms": params.n_atoms,
                "hopping": params.hopping,
                "interaction": params.interaction,
                "tilt": params.tilt,
                "unit": params.unit,
            },
            "t_max": t_max,
            "t_steps": args.t_steps,
            "time_unit": time_unit,
            "files": ["distribution.csv", "observables.csv", "entanglement.json"],
        },
    )
    print(f"wrote trajectory data to {out}")
    return 0


# ---------------------------------------------------------------------------
# figure
# ---------------------------------------------------------------------------

def _density_entry(name: str, series, params: ModelParams) -> dict:
    return {
        "path": name,
        "kind": "density",
        "columns": ["time"] + [f"P_{i}" for i in range(params.n_atoms + 1)],
        "n_atoms": params.n_atoms,
        "t_min": float(series.times[0]),
        "t_max": float(series.times[-1]),
    }


def _figure_1(out: Path) -> dict:
    params = fixtures.fig1_params()
    osc = analytic.tilted_oscillation(params.n_atoms, params.hopping, params.tilt)
    period = 2.0 * math.pi / osc.frequency
    ts = np.linspace(0.0, fixtures.FIG1_DENSITY_PERIODS * period,
                     fixtures.FIG1_DENSITY_SAMPLES)
    series = trajectory(params, initial_state_all_right(params.n_atoms), ts)
    dataio.write_timeseries_distribution(series, out / "density.csv")

    tilts = np.linspace(
        0.0,
        fixtures.FIG1_TILT_GRID_MAX_OVER_2J * 2.0 * params.hopping,
        fixtures.FIG1_TILT_GRID_POINTS,
    )
    base = params.with_tilt(0.0)
    sweep = tilt_sweep(base, tilts, refine=False, allow_large=True)
    amp_rows = []
    for rec in sweep.records:
        o = analytic.tilted_oscillation(params.n_atoms, params.hopping, rec["tilt"])
        amp_rows.append([rec["tilt"], rec["amplitude"], o.amplitude])
    dataio.write_csv(out / "amplitude_vs_tilt.csv",
                     ["tilt", "amplitude_sampled", "amplitude_formula"], amp_rows)
    freq_rows = [
        [t, analytic.tilted_oscillation(params.n_atoms, params.hopping, t).frequency]
        for t in tilts
    ]
    dataio.write_csv(out / "frequency_vs_tilt.csv", ["tilt", "frequency"], freq_rows)
    return {
        "figure": 1,
        "params": {"n_atoms": params.n_atoms, "hopping": params.hopping,
                   "interaction": 0.0, "tilt": params.tilt},
        "files": [
            _density_entry("density.csv", series, params),
            {"path": "amplitude_vs_tilt.csv", "kind": "curves",
             "columns": ["tilt", "amplitude_sampled", "amplitude_formula"]},
            {"path": "frequency_vs_tilt.csv", "kind": "curves",
             "columns": ["tilt", "frequency"]},
        ],
    }


def _figure_2(out: Path) -> dict:
    params = fixtures.fig2_params()
    carrier = math.pi / params.hopping
    ts = np.linspace(0.0, fixtures.FIG2_DENSITY_CARRIER_PERIODS * carrier,
                     fixtures.FIG2_DENSITY_SAMPLES)
    series = trajectory(params, initial_state_all_right(params.n_atoms), ts)
    dataio.write_timeseries_distribution(series, out / "density.csv")

    t_revival = math.pi / params.interaction
    ts2 = np.linspace(0.0, fixtures.FIG2_OBS_REVIVALS * t_revival,
                      fixtures.FIG2_OBS_SAMPLES)
    series2 = trajectory(params, initial_state_all_right(params.n_atoms), ts2)
    rows = [
        [t, m, v,
         analytic.josephson_mean_occupation(params.n_atoms, params.hopping,
                                            params.interaction, t)]
        for t, m, v in zip(series2.times, series2.mean, series2.variance)
    ]
    dataio.write_csv(out / "observables.csv",
                     ["time", "mean_left", "variance_left", "mean_formula"], rows)
    return {
        "figure": 2,
        "params": {"n_atoms": params.n_atoms, "hopping": params.hopping,
                   "interaction": params.interaction, "tilt": 0.0},
        "files": [
            _density_entry("density.csv", series, params),
            {"path": "observables.csv", "kind": "curves",
             "columns": ["time", "mean_left", "variance_left", "mean_formula"]},
        ],
    }


def _figure_3(out: Path) -> dict:
    files = []
    manifest_params = {}
    for tag, p in (("symmetric", 0), ("resonance", fixtures.FIG3_RESONANCE_P)):
        params = fixtures.fig3_density_params(p)
        period = tunneling_period(params).period.to_float()
        ts = np.linspace(0.0, fixtures.FIG3_DENSITY_PERIODS * period,
                         fixtures.FIG3_DENSITY_SAMPLES)
        series = trajectory(params, initial_state_all_right(params.n_atoms), ts)
        name = f"density_{tag}.csv"
        dataio.write_timeseries_distribution(series, out / name)
        files.append(_density_entry(name, series, params))
        manifest_params[tag] = {
            "n_atoms": params.n_atoms, "hopping": params.hopping,
            "interaction": params.interaction, "tilt": params.tilt,
        }

    scan_params = fixtures.fig3_scan_params()
    u = scan_params.interaction
    tilts = np.linspace(0.0, fixtures.FIG3_SCAN_MAX_OVER_2U * 2.0 * u,
                        fixtures.FIG3_SCAN_POINTS)
    sweep = tilt_sweep(scan_params, tilts, refine=True)
    dataio.write_csv(
        out / "amplitude_vs_tilt.csv",
        ["tilt", "amplitude"],
        ([r["tilt"], r["amplitude"]] for r in sweep.records),
    )
    zoom_center = analytic.resonance_tilt(fixtures.FIG3_ZOOM_P, u)
    window = analytic.tilt_window(
        scan_params.n_atoms, fixtures.FIG3_ZOOM_P, scan_params.zeta, u
    ).to_float()
    zoom = [
        [r["tilt"], r["amplitude"]]
        for r in sweep.records
        if abs(r["tilt"] - zoom_center) <= 4.0 * window
    ]
    dataio.write_csv(out / "amplitude_zoom.csv", ["tilt", "amplitude"], zoom)
    files.append({"path": "amplitude_vs_tilt.csv", "kind": "curves",
                  "columns": ["tilt", "amplitude"]})
    files.append({"path": "amplitude_zoom.csv", "kind": "curves",
                  "columns": ["tilt", "amplitude"],
                  "zoom_center": zoom_center, "zoom_halfwidth": 4.0 * window})
    manifest_params["scan"] = {
        "n_atoms": scan_params.n_atoms, "hopping": scan_params.hopping,
        "interaction": u,
    }
    return {"figure": 3, "params": manifest_params, "files": files}


def _figure_4(out: Path) -> dict:
    files = []
    for pp in fixtures.FIG4_P_PRIMES:
        ns = range(pp, fixtures.FIG4_N_MAX_FACTOR * pp + 1, max(1, pp // 10))
        sweep = tau_vs_n(fixtures.FIG4_ZETA, [pp], ns)
        name = f"tau_pprime{pp}.csv"
        dataio.write_csv(
            out / name,
            ["n_atoms", "ln_tau_exact", "ln_tau_stirling", "in_domain"],
            ([r["n_atoms"], r["ln_tau_exact"], r["ln_tau_stirling"], r["in_domain"]]
             for r in sweep.records),
        )
        files.append({"path": name, "kind": "curves", "p_prime": pp,
                      "columns": ["n_atoms", "ln_tau_exact", "ln_tau_stirling",
                                  "in_domain"]})
    return {
        "figure": 4,
        "params": {"zeta": fixtures.FIG4_ZETA,
                   "p_primes": list(fixtures.FIG4_P_PRIMES)},
        "files": files,
    }


def _figure_5(out: Path) -> dict:
    lo, hi = fixtures.FIG5_N_RANGE
    sweep_n = period_vs_n(fixtures.FIG5_ZETA, range(lo, hi + 1))
    dataio.write_csv(
        out / "period_vs_n.csv",
        ["n_atoms", "log10_period"],
        ([r["n_atoms"], r["log10_period"]] for r in sweep_n.records),
    )
    sweep_p = period_vs_p(fixtures.FIG5_ZETA, fixtures.FIG5_P_CURVES_N)
    dataio.write_csv(
        out / "period_vs_p.csv",
        ["n_atoms", "p", "log10_period"],
        ([r["n_atoms"], r["p"], r["log10_period"]] for r in sweep_p.records),
    )
    return {
        "figure": 5,
        "params": {"zeta": fixtures.FIG5_ZETA, "n_range": [lo, hi],
                   "n_curves": list(fixtures.FIG5_P_CURVES_N)},
        "files": [
            {"path": "period_vs_n.csv", "kind": "curves",
             "columns": ["n_atoms", "log10_period"]},
            {"path": "period_vs_p.csv", "kind": "curves",
             "columns": ["n_atoms", "p", "log10_period"]},
        ],
    }


_FIGURES = {1: _figure_1, 2: _figure_2, 3: _figure_3, 4: _figure_4, 5: _figure_5}


def cmd_figure(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = _FIGURES[args.figure_id](out)
    dataio.write_manifest(out / "manifest.json", manifest)
    print(f"wrote figure {args.figure_id} data to {out}")
    return 0


# ---------------------------------------------------------------------------
# design
# ---------------------------------------------------------------------------

def _fmt_time(value: LogScalar, unit: str) -> str:
    suffix = " ms" if unit == "nK" else ""
    try:
        return f"{value.to_float():.4g}{suffix}"
    except OverflowError:
        return f"{value!s}{suffix}"


def cmd_design(args) -> int:
    n = args.n_atoms
    pp = args.noon_size
    if not 1 <= pp <= n:
        raise _bad_args(f"--noon-size must be in [1, N], got {pp}")
    p = n - pp
    unit = args.unit
    u = args.interaction
    if u is None:
        u = fixtures.RB87_INTERACTION_NK if unit == "nK" else 1.0
    zeta = args.zeta

    tilt = analytic.resonance_tilt(p, u)
    split = analytic.resonant_splitting(n, p, zeta, u)
    period = period_from_energy(split, unit)
    quarter = period / 4.0
    window = analytic.tilt_window(n, p, zeta, u)

    e_unit = "nK*k_B" if unit == "nK" else "energy-unit"
    rows = [
        ("atoms total", f"{n}"),
        ("superposition size (N - p)", f"{pp}"),
        ("compensating atoms p", f"{p}"),
        (f"resonance tilt [{e_unit}]", f"{tilt:.6g}"),
        ("tunneling period", _fmt_time(period, unit)),
        ("superposition forms at T/4", _fmt_time(quarter, unit)),
        (f"tilt tolerance window [{e_unit}]",
         f"{window!s}" if abs(window.log10) > 300 else f"{window.to_float():.6g}"),
    ]
    width = max(len(r[0]) for r in rows)
    print(f"design: N = {n}, zeta = {zeta}, U = {u:.6g} {e_unit}")
    if unit == "nK":
        print(f"(hbar/k_B = {HBAR_OVER_KB_NK_MS} nK*ms)")
    for label, value in rows:
        print(f"  {label:<{width}}  {value}")

    if args.out:
        doc = {
            "n_atoms": n, "noon_size": pp, "p": p, "zeta": zeta,
            "interaction": u, "unit": unit,
            "resonance_tilt": tilt,
            "log10_period": period.log10,
            "log10_quarter_period": quarter.log10,
            "log10_window": window.log10,
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    results = checks.run_checks(strict=args.strict)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  worst {r.worst:.3e}  tol {r.tolerance:.3e}"
              + (f"  ({r.detail})" if r.detail and not r.passed else ""))
        failures += not r.passed
    print(f"{len(results) - failures}/{len(results)} checks passed"
          + (" [strict]" if args.strict else ""))
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltwell",
        description="N bosons in a tilted double well: dynamics, resonances, design",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="trajectory + entanglement report")
    sim.add_argument("-N", "--n-atoms", type=int)
    sim.add_argument("-J", "--hopping", type=float)
    sim.add_argument("-U", "--interaction", type=float)
    sim.add_argument("--tilt", type=float)
    sim.add_argument("--tilt-over-J", dest="tilt_over_j", type=float,
                     help="tilt as a multiple of the hopping energy")
    sim.add_argument("--zeta", type=float, help="sets J = zeta * |U|")
    sim.add_argument("--zeta-over-N", dest="zeta_over_n", type=float,
                     help="sets J = x * N * |U|")
    sim.add_argument("--resonance-p", type=int,
                     help="sets the tilt to the p-th resonance 2pU")
    sim.add_argument("--params", help="JSON parameter file (overrides flags)")
    sim.add_argument("--unit", choices=("natural", "nK"), default="natural")
    sim.add_argument("--t-max", type=float,
                     help="trajectory length (default: two tunneling periods)")
    sim.add_argument("--t-steps", type=int, default=501)
    sim.add_argument("--out", required=True, help="output directory")
    sim.set_defaults(func=cmd_simulate)

    fig = sub.add_parser("figure", help="emit CSV data for a bundled figure")
    fig.add_argument("figure_id", type=int, choices=sorted(_FIGURES))
    fig.add_argument("--out-dir", required=True)
    fig.set_defaults(func=cmd_figure)

    des = sub.add_parser("design", help="physical-unit resonance table")
    des.add_argument("--n-atoms", type=int, required=True)
    des.add_argument("--noon-size", type=int, required=True,
                     help="atoms in the embedded superposition, p' = N - p")
    des.add_argument("--zeta", type=float, default=fixtures.RB87_ZETA)
    des.add_argument("--interaction", type=float,
                     help="U in the chosen unit (default: Rb-87 value for nK)")
    des.add_argument("--unit", choices=("natural", "nK"), default="nK")
    des.add_argument("--out", help="also write the table as JSON")
    des.set_defaults(func=cmd_design)

    chk = sub.add_parser("check", help="analytic-vs-ED cross-validation")
    chk.add_argument("--strict", action="store_true", help="halve all tolerances")
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, OverflowError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
