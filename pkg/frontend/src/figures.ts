/** The three figure kinds: mean lines with spread bands, boxplots, contours. */

import * as fs from "node:fs";
import * as path from "node:path";

import { boxStats, contourGrid, groupBy, mean, std, uniqueSorted } from "./aggregate.js";
import { parseCsv, requireColumns } from "./csv.js";
import { ResultRow, scoredRows, toResultRows } from "./rows.js";
import { PlotSpec } from "./spec.js";
import { PALETTE, axes, el, formatTick, heatColor, linearScale, svgDocument, text } from "./svg.js";

const WIDTH = 560;
const HEIGHT = 400;
const MARGIN = { left: 64, right: 140, top: 36, bottom: 48 };

function plotArea() {
  return {
    x: [MARGIN.left, WIDTH - MARGIN.right] as [number, number],
    y: [HEIGHT - MARGIN.bottom, MARGIN.top] as [number, number],
  };
}

function applyFixed(rows: ResultRow[], spec: PlotSpec): ResultRow[] {
  if (!spec.fixed) return rows;
  return rows.filter((row) =>
    Object.entries(spec.fixed as Record<string, number>).every(
      ([column, value]) => row.params[column] === value,
    ),
  );
}

export function loadRows(spec: PlotSpec): ResultRow[] {
  const table = parseCsv(fs.readFileSync(spec.input, "utf-8"));
  requireColumns(table.header, ["ari", "method"]);
  const x = spec.x ?? "eta";
  if (spec.kind === "contour") {
    requireColumns(table.header, [spec.y ?? "eta", x === "eta" ? "epsilon" : x]);
  } else {
    requireColumns(table.header, [x]);
  }
  return applyFixed(scoredRows(toResultRows(table)), spec);
}

function legend(methods: string[]): string[] {
  const parts: string[] = [];
  methods.forEach((method, i) => {
    const y = MARGIN.top + 16 * i;
    const color = PALETTE[i % PALETTE.length];
    parts.push(el("rect", { x: WIDTH - MARGIN.right + 12, y: y - 8, width: 10, height: 10, fill: color }));
    parts.push(text(WIDTH - MARGIN.right + 28, y, method));
  });
  return parts;
}

/** Mean ARI per x value with a +-1 standard deviation band per method. */
export function renderLines(spec: PlotSpec): string[] {
  const rows = loadRows(spec);
  const xColumn = spec.x ?? "eta";
  const area = plotArea();
  const methods = [...new Set(rows.map((r) => r.method))].sort();
  const xValues = uniqueSorted(rows.map((r) => r.params[xColumn]));
  if (xValues.length === 0) {
    throw new Error(`no data to plot: column '${xColumn}' has no values`);
  }
  const x = linearScale([xValues[0], xValues[xValues.length - 1]], area.x);
  const y = linearScale([Math.min(0, ...rows.map((r) => r.ari as number)), 1], area.y);
  const parts = [...axes(x, y, xColumn, "ARI")];
  methods.forEach((method, i) => {
    const color = PALETTE[i % PALETTE.length];
    const curve: [number, number, number][] = [];
    for (const value of xValues) {
      const scores = rows
        .filter((r) => r.method === method && r.params[xColumn] === value)
        .map((r) => r.ari as number);
      if (scores.length === 0) {
        console.warn(`empty group for ${method} at ${xColumn}=${value}; skipped`);
        continue;
      }
      curve.push([value, mean(scores), std(scores)]);
    }
    if (curve.length === 0) return;
    const band = [
      ...curve.map(([v, m, s]) => `${x(v)},${y(m + s)}`),
      ...curve.slice().reverse().map(([v, m, s]) => `${x(v)},${y(m - s)}`),
    ].join(" ");
    parts.push(el("polygon", { points: band, fill: color, opacity: 0.15 }));
    const line = curve.map(([v, m]) => `${x(v)},${y(m)}`).join(" ");
    parts.push(el("polyline", { points: line, fill: "none", stroke: color, "stroke-width": 2 }));
    for (const [v, m] of curve) {
      parts.push(el("circle", { cx: x(v), cy: y(m), r: 3, fill: color }));
    }
  });
  parts.push(...legend(methods));
  if (spec.title) parts.push(text(MARGIN.left, 20, spec.title, { "font-size": 13 }));
  fs.writeFileSync(spec.output, svgDocument(WIDTH, HEIGHT, parts));
  return [spec.output];
}

/** One box per (x value, method): quartile box, median line, whiskers. */
export function renderBox(spec: PlotSpec): string[] {
  const rows = loadRows(spec);
  const xColumn = spec.x ?? "eta";
  const area = plotArea();
  const methods = [...new Set(rows.map((r) => r.method))].sort();
  const xValues = uniqueSorted(rows.map((r) => r.params[xColumn]));
  if (xValues.length === 0) {
    throw new Error(`no data to plot: column '${xColumn}' has no values`);
  }
  const slots = xValues.length * methods.length;
  const x = linearScale([0, slots], area.x);
  const y = linearScale([Math.min(0, ...rows.map((r) => r.ari as number)), 1], area.y);
  const parts = [...axes(linearScale([0, 1], [0, 0]), y, "", "ARI").slice(1)];
  parts.push(el("line", { x1: area.x[0], y1: area.y[0], x2: area.x[1], y2: area.y[0], stroke: "black" }));
  const width = ((area.x[1] - area.x[0]) / Math.max(slots, 1)) * 0.6;
  let slot = 0;
  for (const value of xValues) {
    for (const [i, method] of methods.entries()) {
      const scores = rows
        .filter((r) => r.method === method && r.params[xColumn] === value)
        .map((r) => r.ari as number);
      const center = x(slot + 0.5);
      slot += 1;
      if (scores.length === 0) {
        console.warn(`empty group for ${method} at ${xColumn}=${value}; skipped`);
        continue;
      }
      const stats = boxStats(scores);
      const color = PALETTE[i % PALETTE.length];
      parts.push(el("line", { x1: center, y1: y(stats.low), x2: center, y2: y(stats.high), stroke: color }));
      parts.push(el("rect", {
        x: center - width / 2,
        y: y(stats.q3),
        width,
        height: Math.max(y(stats.q1) - y(stats.q3), 0.5),
        fill: color,
        opacity: 0.35,
        stroke: color,
      }));
      parts.push(el("line", {
        x1: center - width / 2, y1: y(stats.median),
        x2: center + width / 2, y2: y(stats.median),
        stroke: color, "stroke-width": 2,
      }));
    }
    parts.push(text(x(slot - methods.length / 2) - 10, area.y[0] + 16,
                    `${xColumn}=${formatTick(value)}`));
  }
  parts.push(...legend(methods));
  if (spec.title) parts.push(text(MARGIN.left, 20, spec.title, { "font-size": 13 }));
  fs.writeFileSync(spec.output, svgDocument(WIDTH, HEIGHT, parts));
  return [spec.output];
}

/** Marching-squares iso-lines for one level over a grid (NaN cells skipped). */
function isoSegments(xs: number[], ys: number[], grid: number[][], level: number): [number, number, number, number][] {
  const segments: [number, number, number, number][] = [];
  for (let i = 0; i < xs.length - 1; i += 1) {
    for (let j = 0; j < ys.length - 1; j += 1) {
      const corners = [
        [xs[i], ys[j], grid[i][j]],
        [xs[i + 1], ys[j], grid[i + 1][j]],
        [xs[i + 1], ys[j + 1], grid[i + 1][j + 1]],
        [xs[i], ys[j + 1], grid[i][j + 1]],
      ] as const;
      if (corners.some(([, , v]) => Number.isNaN(v))) continue;
      const crossings: [number, number][] = [];
      for (let c = 0; c < 4; c += 1) {
        const [x1, y1, v1] = corners[c];
        const [x2, y2, v2] = corners[(c + 1) % 4];
        const above1 = v1 >= level;
        const above2 = v2 >= level;
        if (above1 !== above2) {
          const t = (level - v1) / (v2 - v1);
          crossings.push([x1 + t * (x2 - x1), y1 + t * (y2 - y1)]);
        }
      }
      for (let c = 0; c + 1 < crossings.length; c += 2) {
        segments.push([crossings[c][0], crossings[c][1], crossings[c + 1][0], crossings[c + 1][1]]);
      }
    }
  }
  return segments;
}

/**
 * One figure per method: mean-ARI cells over the two sweep axes with
 * iso-lines, plus a sidecar JSON carrying the aggregated cell values.
 */
export function renderContour(spec: PlotSpec): string[] {
  const rows = loadRows(spec);
  const xColumn = spec.y !== undefined && spec.x !== undefined && spec.x !== "eta"
    ? spec.x
    : "epsilon";
  const yColumn = spec.y ?? "eta";
  const area = plotArea();
  const methods = [...new Set(rows.map((r) => r.method))].sort();
  const written: string[] = [];
  const stem = spec.output.replace(/\.svg$/i, "");
  for (const method of methods) {
    const grid = contourGrid(rows, method, xColumn, yColumn);
    if (grid.cells.length === 0) {
      console.warn(`method ${method} has no aggregable cells; skipped`);
      continue;
    }
    const x = linearScale([grid.epsilons[0], grid.epsilons[grid.epsilons.length - 1]], area.x);
    const y = linearScale([grid.etas[0], grid.etas[grid.etas.length - 1]], area.y);
    const parts: string[] = [];
    for (let i = 0; i < grid.epsilons.length; i += 1) {
      for (let j = 0; j < grid.etas.length; j += 1) {
        const value = grid.means[i][j];
        if (Number.isNaN(value)) continue;
        const x0 = i === 0 ? area.x[0] : (x(grid.epsilons[i - 1]) + x(grid.epsilons[i])) / 2;
        const x1 = i === grid.epsilons.length - 1 ? area.x[1] : (x(grid.epsilons[i]) + x(grid.epsilons[i + 1])) / 2;
        const y1 = j === 0 ? area.y[0] : (y(grid.etas[j - 1]) + y(grid.etas[j])) / 2;
        const y0 = j === grid.etas.length - 1 ? area.y[1] : (y(grid.etas[j]) + y(grid.etas[j + 1])) / 2;
        parts.push(el("rect", {
          x: x0, y: y0, width: x1 - x0, height: y1 - y0,
          fill: heatColor(value), stroke: "none",
        }));
        parts.push(text((x0 + x1) / 2 - 12, (y0 + y1) / 2 + 4, value.toFixed(2), { fill: "white" }));
      }
    }
    for (const level of [0.1, 0.3, 0.5, 0.7, 0.9]) {
      for (const [sx, sy, tx, ty] of isoSegments(grid.epsilons, grid.etas, grid.means, level)) {
        parts.push(el("line", {
          x1: x(sx), y1: y(sy), x2: x(tx), y2: y(ty),
          stroke: "white", "stroke-width": 1.5, opacity: 0.9,
        }));
      }
    }
    parts.push(...axes(x, y, xColumn, yColumn));
    parts.push(text(MARGIN.left, 20, spec.title ? `${spec.title} (${method})` : method,
                    { "font-size": 13 }));
    const outPath = `${stem}-${method}.svg`;
    fs.writeFileSync(outPath, svgDocument(WIDTH, HEIGHT, parts));
    written.push(outPath);
    const sidecar = `${stem}-${method}.values.json`;
    fs.writeFileSync(sidecar, JSON.stringify({
      method,
      x: xColumn,
      y: yColumn,
      cells: grid.cells,
    }, null, 2));
    written.push(sidecar);
  }
  if (written.length === 0) {
    throw new Error("no contour figures were produced (no aggregable data)");
  }
  return written;
}

export function render(spec: PlotSpec): string[] {
  fs.mkdirSync(path.dirname(path.resolve(spec.output)), { recursive: true });
  if (spec.kind === "lines") return renderLines(spec);
  if (spec.kind === "box") return renderBox(spec);
  return renderContour(spec);
}
