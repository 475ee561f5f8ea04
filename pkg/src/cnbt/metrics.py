"""Clustering agreement metrics."""
from __future__ import annotations

import numpy as np


def _pairs(x: np.ndarray) -> np.ndarray:
    return x * (x - 1) // 2


def ari(labels_a, labels_b) -> float:
    """Adjusted Rand index between two labelings of the same items.

    Standard pair-counting form computed from the contingency table with
    exact integer combinatorics; only the final ratio is floating point.
    Symmetric, invariant under relabeling either argument, and equal to 1
    only for identical partitions.
    """
    a = np.asarray(labels_a).reshape(-1)
    b = np.asarray(labels_b).reshape(-1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"label lengths differ: {a.shape[0]} vs {b.shape[0]}")
    n = a.shape[0]
    if n < 2:
        raise ValueError("need at least two items to compare partitions")
    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    table = np.zeros((int(ai.max()) + 1, int(bi.max()) + 1), dtype=np.int64)
    np.add.at(table, (ai, bi), 1)
    index = int(_pairs(table).sum())
    sum_a = int(_pairs(table.sum(axis=1)).sum())
    sum_b = int(_pairs(table.sum(axis=0)).sum())
    total = int(_pairs(np.int64(n)))
    expected = sum_a * sum_b / total
    max_index = (sum_a + sum_b) / 2.0
    if max_index == expected:
        # Both partitions trivial and identical (all-same or all-singletons).
        return 1.0
    return float((index - expected) / (max_index - expected))
