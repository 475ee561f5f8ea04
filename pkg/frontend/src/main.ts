/**
 * Figure renderer for benchmark CSVs.
 *
 * Usage: node dist/src/main.js <spec.json>
 *
 * The spec names the input CSV, a figure kind (lines | box | contour) and
 * an output path; see spec.ts for the optional fields.  Contour output is
 * one SVG per method plus a .values.json sidecar with the aggregated
 * means, so downstream checks can verify them independently.
 */

import { render } from "./figures.js";
import { loadSpec } from "./spec.js";

function main(argv: string[]): number {
  if (argv.length !== 1) {
    console.error("usage: main.js <plot-spec.json>");
    return 2;
  }
  try {
    const written = render(loadSpec(argv[0]));
    for (const path of written) {
      console.log(path);
    }
    return 0;
  } catch (error) {
    console.error(error instanceof Error ? error.message : String(error));
    return 1;
  }
}

process.exit(main(process.argv.slice(2)));
