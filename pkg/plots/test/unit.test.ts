import fs from "node:fs";
import os from "node:os";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { column, readCsv, DataFileError } from "../src/csv.js";
import { readManifest } from "../src/manifest.js";
import { render } from "../src/figures.js";
import { heatmap, lineChart, makeScale } from "../src/svg.js";

let tmp: string;

beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "plots-unit-"));
});

afterAll(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

function write(name: string, text: string): string {
  const p = path.join(tmp, name);
  fs.mkdirSync(path.dirname(p), { recursive: true });
  fs.writeFileSync(p, text);
  return p;
}

describe("csv reader", () => {
  it("parses numeric tables with headers", () => {
    const p = write("ok.csv", "time,P_0,P_1\r\n0,1,0\r\n0.5,0.75,0.25\r\n");
    const t = readCsv(p);
    expect(t.header).toEqual(["time", "P_0", "P_1"]);
    expect(t.rows).toHaveLength(2);
    expect(column(t, "P_1", p)).toEqual([0, 0.25]);
  });

  it("reports the offending path for missing files", () => {
    const missing = path.join(tmp, "nope.csv");
    expect(() => readCsv(missing)).toThrowError(DataFileError);
    expect(() => readCsv(missing)).toThrowError(missing);
  });

  it("rejects non-numeric cells and ragged rows", () => {
    const p1 = write("bad1.csv", "a,b\r\n1,x\r\n");
    expect(() => readCsv(p1)).toThrowError(/non-numeric/);
    const p2 = write("bad2.csv", "a,b\r\n1\r\n");
    expect(() => readCsv(p2)).toThrowError(/fields/);
  });

  it("rejects unknown columns", () => {
    const p = write("cols.csv", "a,b\r\n1,2\r\n");
    expect(() => column(readCsv(p), "c", p)).toThrowError(/missing column "c"/);
  });
});

describe("manifest reader", () => {
  it("requires figure number and files", () => {
    write("m1/manifest.json", JSON.stringify({ files: [] }));
    expect(() => readManifest(path.join(tmp, "m1"))).toThrowError(/figure/);
  });

  it("requires density axis metadata", () => {
    write(
      "m2/manifest.json",
      JSON.stringify({
        figure: 1,
        params: {},
        files: [{ path: "d.csv", kind: "density", columns: ["time"], n_atoms: 2 }],
      }),
    );
    expect(() => readManifest(path.join(tmp, "m2"))).toThrowError(/t_min/);
  });
});

describe("svg primitives", () => {
  it("heatmap embeds its axis ranges as data attributes", () => {
    const svg = heatmap(
      { x: 0, y: 0, width: 100, height: 80 },
      {
        times: [0, 1, 2],
        values: [
          [1, 0],
          [0.5, 0.5],
          [0, 1],
        ],
        nLevels: 2,
        tMin: 0,
        tMax: 2,
      },
    );
    expect(svg).toContain('data-kind="heatmap"');
    expect(svg).toContain('data-t-min="0"');
    expect(svg).toContain('data-t-max="2"');
    expect(svg).toContain('data-n-levels="2"');
    expect(svg).toContain("<rect");
  });

  it("line charts draw one polyline per curve", () => {
    const svg = lineChart({ x: 0, y: 0, width: 100, height: 80 }, [
      { x: [0, 1], y: [0, 1], label: "a" },
      { x: [0, 1], y: [1, 0], label: "b", dashed: true },
    ]);
    expect(svg.match(/<polyline/g)).toHaveLength(2);
    expect(svg).toContain("stroke-dasharray");
  });

  it("scales degenerate domains without dividing by zero", () => {
    const s = makeScale([3, 3], [0, 10]);
    expect(Number.isFinite(s(3))).toBe(true);
  });
});

describe("figure renderer on synthetic data", () => {
  it("renders a minimal figure-5 data set", () => {
    const dir = path.join(tmp, "fig5");
    fs.mkdirSync(dir, { recursive: true });
    write("fig5/period_vs_n.csv", "n_atoms,log10_period\r\n2,1\r\n3,2\r\n4,3.5\r\n");
    write(
      "fig5/period_vs_p.csv",
      "n_atoms,p,log10_period\r\n4,0,3.5\r\n4,1,2\r\n4,2,1\r\n4,3,0.5\r\n",
    );
    write(
      "fig5/manifest.json",
      JSON.stringify({
        figure: 5,
        params: {},
        files: [
          { path: "period_vs_n.csv", kind: "curves", columns: ["n_atoms", "log10_period"] },
          { path: "period_vs_p.csv", kind: "curves", columns: ["n_atoms", "p", "log10_period"] },
        ],
      }),
    );
    const out = path.join(tmp, "fig5.svg");
    render(5, dir, out);
    const svg = fs.readFileSync(out, "utf-8");
    expect(svg).toContain("<svg");
    expect(svg).toContain('data-figure="5"');
  });

  it("refuses a manifest for a different figure", () => {
    expect(() => render(4, path.join(tmp, "fig5"), path.join(tmp, "x.svg"))).toThrowError(
      /manifest is for figure 5/,
    );
  });

  it("fails with the offending path when a CSV is missing", () => {
    const dir = path.join(tmp, "broken");
    write(
      "broken/manifest.json",
      JSON.stringify({
        figure: 5,
        params: {},
        files: [
          { path: "period_vs_n.csv", kind: "curves", columns: ["n_atoms", "log10_period"] },
          { path: "period_vs_p.csv", kind: "curves", columns: ["n_atoms", "p", "log10_period"] },
        ],
      }),
    );
    let message = "";
    try {
      render(5, dir, path.join(tmp, "y.svg"));
    } catch (err) {
      message = (err as Error).message;
    }
    expect(message).toContain(path.join(dir, "period_vs_n.csv"));
  });

  it("rejects unknown figure ids", () => {
    expect(() => render(9, tmp, path.join(tmp, "z.svg"))).toThrowError(RangeError);
  });
});
