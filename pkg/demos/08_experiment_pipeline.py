"""End-to-end sweep: config, trials, CSV, and figure specs.

Runs a small factorial experiment over (epsilon, eta), writes the CSV the
figure renderer consumes, and prints the aggregate table.  The frontend
package (frontend/) turns the same CSV into line, box and contour SVGs:

    node frontend/dist/src/main.js demos/out/contour.json
"""
import json
from pathlib import Path

import numpy as np

from cnbt import ExperimentConfig, run_experiment, write_csv

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

cfg = ExperimentConfig.from_dict({
    "model": "sparse-dsbm",
    "n": 300,
    "K": 3,
    "params": {"c": 8.0},
    "sweep": {"epsilon": [2.0, 4.0, 8.0], "eta": [0.5, 1.0]},
    "methods": ["cnbt-out", "simpleherm"],
    "seeds": 3,
})
rows = run_experiment(cfg)
csv_path = out_dir / "sweep.csv"
write_csv(rows, csv_path)
print(f"wrote {len(rows)} trial rows to {csv_path}")

print("\nmean ARI by (epsilon, eta, method):")
for eps in (2.0, 4.0, 8.0):
    for eta in (0.5, 1.0):
        cells = []
        for method in ("cnbt-out", "simpleherm"):
            scores = [r.ari for r in rows
                      if r.method == method and r.point["epsilon"] == eps
                      and r.point["eta"] == eta and r.ari is not None]
            cells.append(f"{method} {np.mean(scores):5.2f}")
        print(f"  epsilon={eps:3.0f} eta={eta:3.1f}: " + "  ".join(cells))

for kind in ("lines", "box", "contour"):
    spec = {
        "input": str(csv_path),
        "kind": kind,
        "x": "epsilon",
        "y": "eta" if kind == "contour" else None,
        "output": str(out_dir / f"{kind}.svg"),
        "title": f"sparse benchmark sweep ({kind})",
    }
    spec = {k: v for k, v in spec.items() if v is not None}
    if kind == "box":
        spec["fixed"] = {"eta": 1.0}
    path = out_dir / f"{kind}.json"
    path.write_text(json.dumps(spec, indent=2))
    print(f"figure spec written: {path}")
