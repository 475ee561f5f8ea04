/** Grouping and summary statistics over result rows. */

import { ResultRow } from "./rows.js";

export function mean(values: number[]): number {
  if (values.length === 0) {
    throw new Error("mean of an empty group");
  }
  return values.reduce((acc, v) => acc + v, 0) / values.length;
}

export function std(values: number[]): number {
  const m = mean(values);
  return Math.sqrt(mean(values.map((v) => (v - m) ** 2)));
}

/** Quartiles by linear interpolation, plus whisker extremes. */
export interface BoxStats {
  low: number;
  q1: number;
  median: number;
  q3: number;
  high: number;
  count: number;
}

function quantile(sorted: number[], q: number): number {
  const pos = (sorted.length - 1) * q;
  const lo = Math.floor(pos);
  const hi = Math.ceil(pos);
  if (lo === hi) return sorted[lo];
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo);
}

export function boxStats(values: number[]): BoxStats {
  if (values.length === 0) {
    throw new Error("box statistics of an empty group");
  }
  const sorted = [...values].sort((a, b) => a - b);
  return {
    low: sorted[0],
    q1: quantile(sorted, 0.25),
    median: quantile(sorted, 0.5),
    q3: quantile(sorted, 0.75),
    high: sorted[sorted.length - 1],
    count: sorted.length,
  };
}

export function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const out = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = out.get(k);
    if (bucket) {
      bucket.push(item);
    } else {
      out.set(k, [item]);
    }
  }
  return out;
}

export function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

/** Mean score per (x grid, y grid) cell for one method. */
export interface ContourCell {
  epsilon: number;
  eta: number;
  mean: number;
  count: number;
}

export interface ContourGrid {
  method: string;
  epsilons: number[];
  etas: number[];
  /** means[i][j] is the cell at epsilons[i], etas[j]; NaN marks an empty cell. */
  means: number[][];
  cells: ContourCell[];
}

export function contourGrid(rows: ResultRow[], method: string,
                            xColumn = "epsilon", yColumn = "eta"): ContourGrid {
  const mine = rows.filter((r) => r.method === method && r.ari !== null);
  const epsilons = uniqueSorted(mine.map((r) => r.params[xColumn]));
  const etas = uniqueSorted(mine.map((r) => r.params[yColumn]));
  const cells: ContourCell[] = [];
  const means = epsilons.map((eps) =>
    etas.map((eta) => {
      const scores = mine
        .filter((r) => r.params[xColumn] === eps && r.params[yColumn] === eta)
        .map((r) => r.ari as number);
      if (scores.length === 0) {
        console.warn(`empty group at ${xColumn}=${eps}, ${yColumn}=${eta}; skipped`);
        return Number.NaN;
      }
      const m = mean(scores);
      cells.push({ epsilon: eps, eta, mean: m, count: scores.length });
      return m;
    }),
  );
  return { method, epsilons, etas, means, cells };
}
