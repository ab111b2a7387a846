import fs from "node:fs";
import path from "node:path";
import { column, readCsv, DataFileError, type Table } from "./csv.js";
import { curveEntry, densityEntries, readManifest, type DensityEntry, type Manifest } from "./manifest.js";
import { document, heatmap, lineChart, tag, type Curve, type Frame, type HeatmapData } from "./svg.js";

const LN10 = Math.log(10);

function loadDensity(dataDir: string, entry: DensityEntry): HeatmapData {
  const file = path.join(dataDir, entry.path);
  const table = readCsv(file);
  const nLevels = entry.n_atoms + 1;
  if (table.header.length !== nLevels + 1 || table.header[0] !== "time") {
    throw new DataFileError(file, `expected columns time, P_0..P_${entry.n_atoms}`);
  }
  return {
    times: table.rows.map((r) => r[0]),
    values: table.rows.map((r) => r.slice(1)),
    nLevels,
    tMin: entry.t_min,
    tMax: entry.t_max,
  };
}

function loadCurveTable(dataDir: string, name: string): { table: Table; file: string } {
  const file = path.join(dataDir, name);
  return { table: readCsv(file), file };
}

// ---------------------------------------------------------------- figures

function renderFigure1(dataDir: string, manifest: Manifest): string {
  const density = densityEntries(manifest)[0];
  if (!density) throw new DataFileError(path.join(dataDir, "manifest.json"), "figure 1 needs a density entry");
  const heat = loadDensity(dataDir, density);

  const amp = loadCurveTable(dataDir, curveEntry(manifest, "amplitude_vs_tilt.csv", dataDir).path);
  const freq = loadCurveTable(dataDir, curveEntry(manifest, "frequency_vs_tilt.csv", dataDir).path);

  const fa: Frame = { x: 55, y: 35, width: 290, height: 230, title: "occupation density", xLabel: "t", yLabel: "n_L" };
  const fb: Frame = { x: 420, y: 35, width: 220, height: 230, title: "swing vs tilt", xLabel: "tilt", yLabel: "atoms" };
  const fc: Frame = { x: 710, y: 35, width: 220, height: 230, title: "frequency vs tilt", xLabel: "tilt", yLabel: "omega" };

  const ampCurves: Curve[] = [
    { x: column(amp.table, "tilt", amp.file), y: column(amp.table, "amplitude_sampled", amp.file), label: "sampled" },
    { x: column(amp.table, "tilt", amp.file), y: column(amp.table, "amplitude_formula", amp.file), label: "formula", dashed: true },
  ];
  const freqCurves: Curve[] = [
    { x: column(freq.table, "tilt", freq.file), y: column(freq.table, "frequency", freq.file) },
  ];
  return document(960, 320, 1, heatmap(fa, heat) + lineChart(fb, ampCurves) + lineChart(fc, freqCurves));
}

function renderFigure2(dataDir: string, manifest: Manifest): string {
  const density = densityEntries(manifest)[0];
  if (!density) throw new DataFileError(path.join(dataDir, "manifest.json"), "figure 2 needs a density entry");
  const heat = loadDensity(dataDir, density);
  const obs = loadCurveTable(dataDir, curveEntry(manifest, "observables.csv", dataDir).path);
  const t = column(obs.table, "time", obs.file);

  const fa: Frame = { x: 55, y: 35, width: 290, height: 230, title: "early sloshing", xLabel: "t", yLabel: "n_L" };
  const fb: Frame = { x: 420, y: 35, width: 510, height: 100, title: "mean occupation", yLabel: "mean" };
  const fc: Frame = { x: 420, y: 180, width: 510, height: 100, xLabel: "t", yLabel: "variance" };

  const mean: Curve[] = [
    { x: t, y: column(obs.table, "mean_left", obs.file), label: "exact" },
    { x: t, y: column(obs.table, "mean_formula", obs.file), label: "modulated", dashed: true, color: "#d62728" },
  ];
  const varc: Curve[] = [{ x: t, y: column(obs.table, "variance_left", obs.file), color: "#2ca02c" }];
  return document(960, 320, 2, heatmap(fa, heat) + lineChart(fb, mean) + lineChart(fc, varc));
}

function renderFigure3(dataDir: string, manifest: Manifest): string {
  const densities = densityEntries(manifest);
  if (densities.length < 2) {
    throw new DataFileError(path.join(dataDir, "manifest.json"), "figure 3 needs two density entries");
  }
  const sym = loadDensity(dataDir, densities[0]);
  const res = loadDensity(dataDir, densities[1]);
  const ampl = loadCurveTable(dataDir, curveEntry(manifest, "amplitude_vs_tilt.csv", dataDir).path);
  const zoom = loadCurveTable(dataDir, curveEntry(manifest, "amplitude_zoom.csv", dataDir).path);

  const fa: Frame = { x: 55, y: 35, width: 250, height: 220, title: "symmetric well", xLabel: "t", yLabel: "n_L" };
  const fb: Frame = { x: 380, y: 35, width: 250, height: 220, title: "on resonance", xLabel: "t", yLabel: "n_L" };
  const fc: Frame = { x: 705, y: 35, width: 225, height: 130, title: "swing vs tilt", yLabel: "atoms" };
  const fd: Frame = { x: 705, y: 205, width: 225, height: 70, xLabel: "tilt (zoom)", yLabel: "atoms" };

  const ampCurve: Curve[] = [{ x: column(ampl.table, "tilt", ampl.file), y: column(ampl.table, "amplitude", ampl.file) }];
  const zoomCurve: Curve[] = [
    { x: column(zoom.table, "tilt", zoom.file), y: column(zoom.table, "amplitude", zoom.file), color: "#d62728" },
  ];
  return document(
    960,
    320,
    3,
    heatmap(fa, sym) + heatmap(fb, res) + lineChart(fc, ampCurve) + lineChart(fd, zoomCurve),
  );
}

function renderFigure4(dataDir: string, manifest: Manifest): string {
  const entries = manifest.files.filter((f) => f.kind === "curves");
  if (entries.length === 0) {
    throw new DataFileError(path.join(dataDir, "manifest.json"), "figure 4 has no curve files");
  }
  const panels: string[] = [];
  const width = 280;
  entries.forEach((entry, idx) => {
    const { table, file } = loadCurveTable(dataDir, entry.path);
    const n = column(table, "n_atoms", file);
    const exact = column(table, "ln_tau_exact", file).map((v) => v / LN10);
    const stirling = column(table, "ln_tau_stirling", file).map((v) => v / LN10);
    const frame: Frame = {
      x: 60 + idx * (width + 40),
      y: 35,
      width,
      height: 230,
      title: `embedded size ${entry.p_prime ?? idx + 1}`,
      xLabel: "N",
      yLabel: idx === 0 ? "log10 tau" : undefined,
    };
    panels.push(
      lineChart(frame, [
        { x: n, y: exact, label: "exact", color: "#111111" },
        { x: n, y: stirling, label: "Stirling", color: "#d62728", dashed: true },
      ]),
    );
  });
  return document(60 + entries.length * (width + 40), 320, 4, panels.join(""));
}

function renderFigure5(dataDir: string, manifest: Manifest): string {
  const byN = loadCurveTable(dataDir, curveEntry(manifest, "period_vs_n.csv", dataDir).path);
  const byP = loadCurveTable(dataDir, curveEntry(manifest, "period_vs_p.csv", dataDir).path);

  const fa: Frame = { x: 60, y: 35, width: 380, height: 230, title: "symmetric period", xLabel: "N", yLabel: "log10 T" };
  const fb: Frame = { x: 540, y: 35, width: 380, height: 230, title: "resonant periods", xLabel: "p", yLabel: "log10 T" };

  const left: Curve[] = [
    { x: column(byN.table, "n_atoms", byN.file), y: column(byN.table, "log10_period", byN.file), color: "#111111" },
  ];
  const ns = column(byP.table, "n_atoms", byP.file);
  const ps = column(byP.table, "p", byP.file);
  const logs = column(byP.table, "log10_period", byP.file);
  const groups = [...new Set(ns)].sort((a, b) => a - b);
  const right: Curve[] = groups.map((nValue, idx) => {
    const x: number[] = [];
    const y: number[] = [];
    for (let i = 0; i < ns.length; i++) {
      if (ns[i] === nValue) {
        x.push(ps[i]);
        y.push(logs[i]);
      }
    }
    return { x, y, label: `N = ${nValue}` } satisfies Curve;
  });
  return document(960, 320, 5, lineChart(fa, left, { legend: false }) + lineChart(fb, right));
}

const RENDERERS: Record<number, (dataDir: string, manifest: Manifest) => string> = {
  1: renderFigure1,
  2: renderFigure2,
  3: renderFigure3,
  4: renderFigure4,
  5: renderFigure5,
};

/** Render one figure's data directory to an SVG file. */
export function render(figureId: number, dataDir: string, outFile: string): void {
  const renderer = RENDERERS[figureId];
  if (!renderer) {
    throw new RangeError(`unknown figure id ${figureId} (have 1..5)`);
  }
  const manifest = readManifest(dataDir);
  if (manifest.figure !== figureId) {
    throw new DataFileError(
      path.join(dataDir, "manifest.json"),
      `manifest is for figure ${manifest.figure}, requested ${figureId}`,
    );
  }
  const svg = renderer(dataDir, manifest);
  fs.mkdirSync(path.dirname(path.resolve(outFile)), { recursive: true });
  fs.writeFileSync(outFile, svg + "\n", "utf-8");
}
