/** Plot specification: what to read, which figure kind, where to write. */

import * as fs from "node:fs";

export type FigureKind = "lines" | "box" | "contour";

export interface PlotSpec {
  /** Path of the harness CSV. */
  input: string;
  kind: FigureKind;
  /** Output image path; contour figures append the method name. */
  output: string;
  /** Sweep column on the horizontal axis (lines, box); default "eta". */
  x?: string;
  /** Second sweep column for contours; default "epsilon" x "eta". */
  y?: string;
  /** Filter: keep only rows whose column equals the given value. */
  fixed?: Record<string, number>;
  title?: string;
}

const KINDS: FigureKind[] = ["lines", "box", "contour"];

export function loadSpec(path: string): PlotSpec {
  const raw = JSON.parse(fs.readFileSync(path, "utf-8"));
  return validateSpec(raw);
}

export function validateSpec(raw: unknown): PlotSpec {
  if (typeof raw !== "object" || raw === null) {
    throw new Error("plot spec must be a JSON object");
  }
  const spec = raw as Partial<PlotSpec>;
  if (typeof spec.input !== "string") {
    throw new Error("plot spec needs an 'input' CSV path");
  }
  if (typeof spec.output !== "string") {
    throw new Error("plot spec needs an 'output' image path");
  }
  if (!spec.kind || !KINDS.includes(spec.kind)) {
    throw new Error(`plot spec 'kind' must be one of ${KINDS.join(", ")}`);
  }
  return spec as PlotSpec;
}
