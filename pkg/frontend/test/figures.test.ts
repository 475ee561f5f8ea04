import assert from "node:assert/strict";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { test } from "node:test";

import { render } from "../src/figures.js";
import { validateSpec } from "../src/spec.js";

const HEADER = "model,n,K,p,eta,c,epsilon,pareto_exponent,method,seed,ari,wall_ms,flags";

function sampleCsv(): string {
  const lines = [HEADER];
  for (const epsilon of [2.0, 6.0]) {
    for (const eta of [0.5, 1.0]) {
      for (const method of ["cnbt-out", "simpleherm"]) {
        for (let seed = 0; seed < 3; seed += 1) {
          const ari = method === "cnbt-out" ? 0.2 + 0.1 * epsilon - 0.05 * seed : 0.1 * seed;
          lines.push(
            `sparse-dsbm,90,3,,${eta},8.0,${epsilon},,${method},${seed},${ari},5.0,`,
          );
        }
      }
    }
  }
  return lines.join("\n") + "\n";
}

function workdir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), "cnbt-figures-"));
}

test("spec validation names the problems", () => {
  assert.throws(() => validateSpec({ kind: "lines", output: "x.svg" }), /'input'/);
  assert.throws(() => validateSpec({ input: "a.csv", output: "x.svg", kind: "pie" }),
                /must be one of/);
});

test("lines figure renders one polyline per method", () => {
  const dir = workdir();
  const input = path.join(dir, "rows.csv");
  fs.writeFileSync(input, sampleCsv());
  const output = path.join(dir, "lines.svg");
  const written = render({ input, kind: "lines", output, x: "eta" });
  assert.deepEqual(written, [output]);
  const svg = fs.readFileSync(output, "utf-8");
  assert.match(svg, /<svg /);
  assert.equal((svg.match(/<polyline /g) ?? []).length, 2);
  assert.match(svg, /cnbt-out/);
  assert.match(svg, /simpleherm/);
});

test("box figure renders quartile boxes at a fixed sweep value", () => {
  const dir = workdir();
  const input = path.join(dir, "rows.csv");
  fs.writeFileSync(input, sampleCsv());
  const output = path.join(dir, "box.svg");
  render({ input, kind: "box", output, x: "eta", fixed: { epsilon: 2.0 } });
  const svg = fs.readFileSync(output, "utf-8");
  // 2 eta values x 2 methods, one quartile box each (plus the background).
  assert.equal((svg.match(/<rect /g) ?? []).length, 1 + 4 + 2);
});

test("contour figures carry a sidecar with exact means", () => {
  const dir = workdir();
  const input = path.join(dir, "rows.csv");
  fs.writeFileSync(input, sampleCsv());
  const output = path.join(dir, "contour.svg");
  const written = render({ input, kind: "contour", output });
  const sidecars = written.filter((p) => p.endsWith(".values.json"));
  assert.equal(sidecars.length, 2);
  const payload = JSON.parse(fs.readFileSync(sidecars[0], "utf-8"));
  assert.equal(payload.cells.length, 4);
  for (const cell of payload.cells) {
    assert.equal(cell.count, 3);
  }
  const cnbt = JSON.parse(
    fs.readFileSync(sidecars.find((p) => p.includes("cnbt-out")) as string, "utf-8"),
  );
  const cell = cnbt.cells.find((c: { epsilon: number; eta: number }) =>
    c.epsilon === 2 && c.eta === 0.5);
  // Exact: (0.4 + 0.35 + 0.3) / 3 in IEEE arithmetic.
  assert.equal(cell.mean, (0.4 + 0.35 + 0.3) / 3);
});

test("missing score column is reported by name", () => {
  const dir = workdir();
  const input = path.join(dir, "rows.csv");
  fs.writeFileSync(input, "model,method\nx,y\n");
  assert.throws(
    () => render({ input, kind: "lines", output: path.join(dir, "x.svg") }),
    /column 'ari' missing/,
  );
});

test("empty groups are skipped with a warning, not an error", () => {
  const dir = workdir();
  const input = path.join(dir, "rows.csv");
  const lines = [HEADER,
    `sparse-dsbm,90,3,,0.5,8.0,2.0,,cnbt-out,0,0.5,5.0,`,
    `sparse-dsbm,90,3,,1.0,8.0,2.0,,cnbt-out,1,,5.0,error=X:boom`,
  ];
  fs.writeFileSync(input, lines.join("\n") + "\n");
  const output = path.join(dir, "lines.svg");
  render({ input, kind: "lines", output, x: "eta" });
  assert.ok(fs.existsSync(output));
});
