"""Flat-file formats: edge lists and label files.

Edge lists are tab-separated integer pairs, one directed edge per line.
Lines starting with '#' are comments; an optional header comment
``# n=<count>`` pins the vertex count (otherwise it is max id + 1).
Label files hold one integer per line.  Round-tripping a graph through
write/read is the identity.
"""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .graph import DirectedGraph

_N_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def read_edge_list(path) -> DirectedGraph:
    """Parse an edge-list file into a graph.

    Malformed lines are rejected with their line number; graph-level
    problems (self-loops, duplicates, out-of-range endpoints) are rejected
    by the graph constructor.
    """
    n_declared = None
    edges = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                match = _N_HEADER.match(line)
                if match:
                    n_declared = int(match.group(1))
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'u<TAB>v', got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer endpoint in {raw!r}") from None
            edges.append((u, v))
    if n_declared is None:
        n_declared = max((max(u, v) for u, v in edges), default=-1) + 1
    try:
        return DirectedGraph(n_declared, edges)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def write_edge_list(g: DirectedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"# n={g.n}\n")
        for u, v in g.edges:
            handle.write(f"{u}\t{v}\n")


def read_labels(path) -> np.ndarray:
    labels = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                labels.append(int(line))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer label {raw!r}") from None
    return np.array(labels, dtype=np.int64)


def write_labels(labels, path) -> None:
    labels = np.asarray(labels).reshape(-1)
    with open(path, "w", encoding="utf-8") as handle:
        for value in labels:
            handle.write(f"{int(value)}\n")


def ensure_parent(path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
