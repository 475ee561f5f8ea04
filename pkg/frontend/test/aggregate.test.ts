import assert from "node:assert/strict";
import { test } from "node:test";

import { boxStats, contourGrid, mean, std, uniqueSorted } from "../src/aggregate.js";
import { ResultRow } from "../src/rows.js";

function row(method: string, epsilon: number, eta: number, ari: number): ResultRow {
  return { model: "sparse-dsbm", method, seed: 0, ari, flags: "", params: { epsilon, eta } };
}

test("mean and std are the plain population statistics", () => {
  assert.equal(mean([1, 2, 3]), 2);
  assert.equal(std([2, 2, 2]), 0);
  assert.ok(Math.abs(std([0, 2]) - 1) < 1e-15);
  assert.throws(() => mean([]), /empty/);
});

test("boxStats interpolates quartiles", () => {
  const stats = boxStats([4, 1, 3, 2]);
  assert.equal(stats.low, 1);
  assert.equal(stats.high, 4);
  assert.equal(stats.median, 2.5);
  assert.equal(stats.q1, 1.75);
  assert.equal(stats.q3, 3.25);
});

test("uniqueSorted sorts numerically", () => {
  assert.deepEqual(uniqueSorted([10, 2, 10, 1]), [1, 2, 10]);
});

test("contour grid averages cells exactly and skips empty ones", () => {
  const rows = [
    row("m", 2, 0.5, 0.25),
    row("m", 2, 0.5, 0.75),
    row("m", 6, 0.5, 1.0),
    row("m", 6, 1.0, 0.0),
    row("m", 2, 1.0, 0.5),
  ];
  const grid = contourGrid(rows, "m");
  assert.deepEqual(grid.epsilons, [2, 6]);
  assert.deepEqual(grid.etas, [0.5, 1]);
  assert.equal(grid.means[0][0], (0.25 + 0.75) / 2);
  assert.equal(grid.means[1][0], 1.0);
  assert.equal(grid.cells.length, 4);
  const other = contourGrid(rows, "absent");
  assert.equal(other.cells.length, 0);
});
