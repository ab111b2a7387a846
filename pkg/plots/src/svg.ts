import { scaleLinear, type ScaleLinear } from "d3-scale";
import { interpolateViridis } from "d3-scale-chromatic";

/** Minimal string-assembled SVG: no DOM needed for file output. */

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

export function tag(name: string, attrs: Record<string, string | number>, body = ""): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : esc(v)}"`)
    .join(" ");
  return body === "" ? `<${name} ${parts}/>` : `<${name} ${parts}>${body}</${name}>`;
}

export function fmt(x: number): string {
  if (Number.isInteger(x) && Math.abs(x) < 1e15) return String(x);
  return Number(x.toPrecision(6)).toString();
}

export interface Frame {
  x: number;
  y: number;
  width: number;
  height: number;
  title?: string;
  xLabel?: string;
  yLabel?: string;
}

export type Scale = ScaleLinear<number, number>;

export function makeScale(domain: [number, number], range: [number, number]): Scale {
  const [lo, hi] = domain;
  const safe: [number, number] = lo === hi ? [lo - 1, hi + 1] : [lo, hi];
  return scaleLinear().domain(safe).range(range);
}

const AXIS_STYLE = "stroke:#333;stroke-width:1";
const FONT = "font-family:Helvetica,Arial,sans-serif";

/** Axes, ticks, labels and an optional title around a panel frame. */
export function frameDecorations(f: Frame, xs: Scale, ys: Scale): string {
  const out: string[] = [];
  const x0 = f.x;
  const y0 = f.y + f.height;
  out.push(tag("line", { x1: x0, y1: y0, x2: f.x + f.width, y2: y0, style: AXIS_STYLE }));
  out.push(tag("line", { x1: x0, y1: f.y, x2: x0, y2: y0, style: AXIS_STYLE }));
  for (const t of xs.ticks(5)) {
    const px = xs(t);
    out.push(tag("line", { x1: px, y1: y0, x2: px, y2: y0 + 4, style: AXIS_STYLE }));
    out.push(
      tag(
        "text",
        { x: px, y: y0 + 16, "text-anchor": "middle", "font-size": 10, style: FONT },
        esc(fmt(t)),
      ),
    );
  }
  for (const t of ys.ticks(5)) {
    const py = ys(t);
    out.push(tag("line", { x1: x0 - 4, y1: py, x2: x0, y2: py, style: AXIS_STYLE }));
    out.push(
      tag(
        "text",
        { x: x0 - 7, y: py + 3, "text-anchor": "end", "font-size": 10, style: FONT },
        esc(fmt(t)),
      ),
    );
  }
  if (f.xLabel) {
    out.push(
      tag(
        "text",
        { x: f.x + f.width / 2, y: y0 + 32, "text-anchor": "middle", "font-size": 11, style: FONT },
        esc(f.xLabel),
      ),
    );
  }
  if (f.yLabel) {
    const cx = f.x - 38;
    const cy = f.y + f.height / 2;
    out.push(
      tag(
        "text",
        {
          x: cx,
          y: cy,
          "text-anchor": "middle",
          "font-size": 11,
          style: FONT,
          transform: `rotate(-90 ${fmt(cx)} ${fmt(cy)})`,
        },
        esc(f.yLabel),
      ),
    );
  }
  if (f.title) {
    out.push(
      tag(
        "text",
        { x: f.x + f.width / 2, y: f.y - 8, "text-anchor": "middle", "font-size": 12, "font-weight": "bold", style: FONT },
        esc(f.title),
      ),
    );
  }
  return out.join("");
}

export interface HeatmapData {
  times: number[];
  /** levels[i][k]: value at time i, level k (level axis is 0..nLevels-1) */
  values: number[][];
  nLevels: number;
  tMin: number;
  tMax: number;
}

/** Probability heatmap: one rect per (time, level) cell, viridis colors. */
export function heatmap(f: Frame, data: HeatmapData): string {
  const xs = makeScale([data.tMin, data.tMax], [f.x, f.x + f.width]);
  const ys = makeScale([-0.5, data.nLevels - 0.5], [f.y + f.height, f.y]);
  let vMax = 0;
  for (const row of data.values) for (const v of row) vMax = Math.max(vMax, v);
  if (vMax <= 0) vMax = 1;
  const cells: string[] = [];
  const n = data.times.length;
  for (let i = 0; i < n; i++) {
    const t0 = i === 0 ? data.tMin : 0.5 * (data.times[i - 1] + data.times[i]);
    const t1 = i === n - 1 ? data.tMax : 0.5 * (data.times[i] + data.times[i + 1]);
    for (let k = 0; k < data.nLevels; k++) {
      const v = data.values[i][k];
      if (v < vMax * 1e-4) continue; // background stays the floor color
      cells.push(
        tag("rect", {
          x: xs(t0),
          y: ys(k + 0.5),
          width: Math.max(xs(t1) - xs(t0), 0.1),
          height: Math.abs(ys(0.5) - ys(-0.5)),
          fill: interpolateViridis(v / vMax),
        }),
      );
    }
  }
  const backdrop = tag("rect", {
    x: f.x,
    y: f.y,
    width: f.width,
    height: f.height,
    fill: interpolateViridis(0),
  });
  const body = backdrop + cells.join("") + frameDecorations(f, xs, ys);
  return tag(
    "g",
    {
      "data-kind": "heatmap",
      "data-t-min": data.tMin,
      "data-t-max": data.tMax,
      "data-n-levels": data.nLevels,
    },
    body,
  );
}

export const CURVE_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"];

export interface Curve {
  x: number[];
  y: number[];
  color?: string;
  label?: string;
  dashed?: boolean;
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (Number.isFinite(v)) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  return [lo, hi];
}

/** Line chart panel with shared axes over all curves and an inline legend. */
export function lineChart(f: Frame, curves: Curve[], opts: { legend?: boolean } = {}): string {
  const xAll = curves.flatMap((c) => c.x);
  const yAll = curves.flatMap((c) => c.y);
  const [xLo, xHi] = extent(xAll);
  const [yLo, yHi] = extent(yAll);
  const pad = (yHi - yLo || 1) * 0.05;
  const xs = makeScale([xLo, xHi], [f.x, f.x + f.width]);
  const ys = makeScale([yLo - pad, yHi + pad], [f.y + f.height, f.y]);
  const body: string[] = [];
  curves.forEach((curve, idx) => {
    const color = curve.color ?? CURVE_COLORS[idx % CURVE_COLORS.length];
    const pts: string[] = [];
    for (let i = 0; i < curve.x.length; i++) {
      if (Number.isFinite(curve.x[i]) && Number.isFinite(curve.y[i])) {
        pts.push(`${fmt(xs(curve.x[i]))},${fmt(ys(curve.y[i]))}`);
      }
    }
    body.push(
      tag("polyline", {
        points: pts.join(" "),
        fill: "none",
        stroke: color,
        "stroke-width": 1.3,
        ...(curve.dashed ? { "stroke-dasharray": "5,3" } : {}),
      }),
    );
  });
  if (opts.legend !== false) {
    let ly = f.y + 12;
    curves.forEach((curve, idx) => {
      if (!curve.label) return;
      const color = curve.color ?? CURVE_COLORS[idx % CURVE_COLORS.length];
      const lx = f.x + f.width - 110;
      body.push(
        tag("line", {
          x1: lx, y1: ly - 3, x2: lx + 18, y2: ly - 3,
          stroke: color, "stroke-width": 1.3,
          ...(curve.dashed ? { "stroke-dasharray": "5,3" } : {}),
        }),
      );
      body.push(
        tag("text", { x: lx + 22, y: ly, "font-size": 10, style: FONT }, esc(curve.label)),
      );
      ly += 13;
    });
  }
  return tag("g", { "data-kind": "curves" }, body.join("") + frameDecorations(f, xs, ys));
}

export function document(width: number, height: number, figureId: number, body: string): string {
  return (
    `<?xml version="1.0" encoding="UTF-8"?>` +
    tag(
      "svg",
      {
        xmlns: "http://www.w3.org/2000/svg",
        width,
        height,
        viewBox: `0 0 ${width} ${height}`,
        "data-figure": figureId,
      },
      tag("rect", { x: 0, y: 0, width, height, fill: "white" }) + body,
    )
  );
}
