/**
 * End-to-end: generate all five figure data sets with the simulation CLI,
 * render each to SVG, and check the heatmap axis ranges against the
 * manifests.
 */
import { execFileSync } from "node:child_process";
import fs from "node:fs";
import os from "node:os";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { render } from "../src/figures.js";
import { densityEntries, readManifest } from "../src/manifest.js";

const FIGURES = [1, 2, 3, 4, 5] as const;
const GENERATE_TIMEOUT_MS = 120_000;

let tmp: string;

beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "plots-accept-"));
  for (const fig of FIGURES) {
    execFileSync(
      "tiltwell",
      ["figure", String(fig), "--out-dir", path.join(tmp, `fig${fig}`)],
      { stdio: "pipe", timeout: GENERATE_TIMEOUT_MS },
    );
  }
}, 10 * 60_000);

afterAll(() => {
  if (tmp) fs.rmSync(tmp, { recursive: true, force: true });
});

function attr(svg: string, name: string): string[] {
  const re = new RegExp(`${name}="([^"]+)"`, "g");
  return [...svg.matchAll(re)].map((m) => m[1]);
}

describe("rendering every bundled figure", () => {
  for (const fig of FIGURES) {
    it(
      `figure ${fig} renders without error`,
      () => {
        const dataDir = path.join(tmp, `fig${fig}`);
        const outFile = path.join(tmp, `fig${fig}.svg`);
        render(fig, dataDir, outFile);
        const svg = fs.readFileSync(outFile, "utf-8");
        expect(svg.startsWith('<?xml version="1.0"')).toBe(true);
        expect(svg).toContain("<svg");
        expect(attr(svg, "data-figure")).toEqual([String(fig)]);

        const manifest = readManifest(dataDir);
        const densities = densityEntries(manifest);
        const tMins = attr(svg, "data-t-min").map(Number);
        const tMaxs = attr(svg, "data-t-max").map(Number);
        const nLevels = attr(svg, "data-n-levels").map(Number);
        expect(tMins).toHaveLength(densities.length);
        densities.forEach((entry, i) => {
          expect(nLevels[i]).toBe(entry.n_atoms + 1);
          expect(Math.abs(tMins[i] - entry.t_min)).toBeLessThanOrEqual(
            1e-5 * Math.max(1, Math.abs(entry.t_min)),
          );
          expect(Math.abs(tMaxs[i] - entry.t_max)).toBeLessThanOrEqual(
            1e-5 * Math.max(1, Math.abs(entry.t_max)),
          );
        });
      },
      60_000,
    );
  }

  it("all five images exist", () => {
    for (const fig of FIGURES) {
      const stat = fs.statSync(path.join(tmp, `fig${fig}.svg`));
      expect(stat.size).toBeGreaterThan(2000);
    }
  });
});
