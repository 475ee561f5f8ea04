"""Brute-force enumeration of non-backtracking mixed walks.

A mixed walk moves along undirected adjacencies of the underlying graph,
so directed edges may be traversed against their orientation.  Each step
carries a rotation: +1 when the step follows a one-way edge forward, -1
when it runs one backward, 0 across a bidirected pair.  The rotation of a
walk is the step sum mod R.

This module is deliberately slow and literal.  It enumerates walks by
exhaustive depth-first search and recounts everything from scratch, so it
can serve as an independent oracle for the recurrence- and matrix-based
computations elsewhere in the package:

* ``P[k, r][u, v]``: non-backtracking mixed walks of length k and rotation
  r from u to v,
* ``Q[k, r][e, f]``: such walks ending with oriented edge f to which edge e
  can be prepended while staying non-backtracking,
* ``cycle_counts[k, r]``: closed non-backtracking walks (start point
  distinguished) without a tail, each attributed to its terminal edge, so
  they match the diagonal of ``Q`` exactly.

Enumeration is guarded: graphs where ``n ** (kmax + 1)`` exceeds 1e8 are
rejected up front instead of hanging.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import DirectedGraph, NeighborhoodProfile, OrientedEdgeIndex, PairKind
from .matrices import HermitianAdjacency

ENUMERATION_BOUND = 10**8

Walk = Sequence[int]


def step_rotation(g: DirectedGraph, u: int, v: int) -> int:
    """Rotation of a single step u -> v: +1 forward, -1 backward, 0 bidirected."""
    kind = g.pair_kind(u, v)
    if kind is PairKind.FORWARD:
        return 1
    if kind is PairKind.BACKWARD:
        return -1
    if kind is PairKind.BIDIRECTED:
        return 0
    raise ValueError(f"({u}, {v}) is not adjacent in the underlying graph")


def rotation(g: DirectedGraph, walk: Walk, modulus: int) -> int:
    """Rotation of a mixed walk: signed step sum, reduced to 0..modulus-1."""
    if modulus < 1:
        raise ValueError("rotation modulus must be a positive integer")
    total = 0
    for u, v in zip(walk, walk[1:]):
        total += step_rotation(g, u, v)
    return total % modulus


def is_nbt(walk: Walk) -> bool:
    """True when no step immediately reverses the previous one."""
    return all(walk[i - 1] != walk[i + 1] for i in range(1, len(walk) - 1))


def _require_cycle(walk: Walk) -> None:
    if len(walk) < 3 or walk[0] != walk[-1]:
        raise ValueError("expected a closed walk (first vertex equal to last)")


def has_tail(walk: Walk) -> bool:
    """True when the cycle is non-backtracking but its square is not.

    Implemented literally by building the doubled cycle and re-running the
    non-backtracking predicate.
    """
    _require_cycle(walk)
    if not is_nbt(walk):
        return False
    doubled = list(walk) + list(walk[1:])
    return not is_nbt(doubled)


def is_primitive(walk: Walk) -> bool:
    """True when the cycle is not a repetition of a shorter cycle."""
    _require_cycle(walk)
    steps = list(walk[:-1])
    k = len(steps)
    for d in range(1, k):
        if k % d == 0 and all(steps[i] == steps[i % d] for i in range(k)):
            return False
    return True


@dataclass(frozen=True)
class WalkCountTables:
    """Exhaustive walk counts up to length kmax at rotation modulus R.

    ``P`` has shape (kmax+1, R, n, n), ``Q`` has shape (kmax+1, R, 2m, 2m)
    and ``cycle_counts`` has shape (kmax+1, R); all entries are exact
    integers.
    """

    modulus: int
    kmax: int
    index: OrientedEdgeIndex
    P: np.ndarray
    Q: np.ndarray
    cycle_counts: np.ndarray


def count_walk_tables(g: DirectedGraph, kmax: int, modulus: int) -> WalkCountTables:
    """Enumerate all non-backtracking mixed walks of length <= kmax."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    if modulus < 1:
        raise ValueError("rotation modulus must be a positive integer")
    bound = g.n ** (kmax + 1)
    if bound > ENUMERATION_BOUND:
        raise ValueError(
            f"enumeration bound exceeded: n**(kmax+1) = {bound} > {ENUMERATION_BOUND}"
        )
    index = OrientedEdgeIndex(g)
    profile = NeighborhoodProfile(g)
    n, m = g.n, index.m
    R = modulus

    rot = {}
    for i, (u, v) in enumerate(index.edges):
        rot[(u, v)] = step_rotation(g, u, v)

    P = np.zeros((kmax + 1, R, n, n), dtype=np.int64)
    Q = np.zeros((kmax + 1, R, 2 * m, 2 * m), dtype=np.int64)
    cycles = np.zeros((kmax + 1, R), dtype=np.int64)
    P[0, 0] = np.eye(n, dtype=np.int64)
    Q[0, 0] = np.eye(2 * m, dtype=np.int64)

    # Vertex walks: DFS from every start, one stack frame per extension.
    # Closed walks are classified tailless exactly when the vertex before
    # the return differs from the second vertex of the walk.
    for start in range(n):
        stack = [(None, start, 0, 0, None)]  # prev, cur, length, rot sum, second vertex
        while stack:
            prev, cur, length, r, second = stack.pop()
            if length > 0:
                P[length, r % R, start, cur] += 1
                if cur == start and length >= 2 and prev != second:
                    cycles[length, r % R] += 1
            if length == kmax:
                continue
            for nxt in profile.neighbors[cur]:
                if nxt == prev:
                    continue
                stack.append((cur, nxt, length + 1, r + rot[(cur, nxt)],
                              nxt if length == 0 else second))

    # Edge walks: DFS from every starting oriented edge; a walk beginning
    # with f1 is recorded against every edge e that can be prepended, i.e.
    # the edges arriving at the head of f1 other than its own reverse.
    heads, tails = index.heads, index.tails
    incoming: list[list[int]] = [[] for _ in range(n)]
    outgoing: list[list[int]] = [[] for _ in range(n)]
    for e in range(2 * m):
        incoming[tails[e]].append(e)
        outgoing[heads[e]].append(e)
    edge_rot = np.array([rot[(u, v)] for u, v in index.edges], dtype=np.int64) if m else np.zeros(0, dtype=np.int64)

    for first in range(2 * m):
        preds = [e for e in incoming[heads[first]] if e != index.reverse(first)]
        if not preds:
            continue
        stack2 = [(first, 1, int(edge_rot[first]))]
        while stack2:
            cur, length, r = stack2.pop()
            row = r % R
            for e in preds:
                Q[length, row, e, cur] += 1
            if length == kmax:
                continue
            for nxt in outgoing[tails[cur]]:
                if tails[nxt] == heads[cur]:
                    continue
                stack2.append((nxt, length + 1, r + int(edge_rot[nxt])))

    return WalkCountTables(R, kmax, index, P, Q, cycles)


def r_k_via_recurrence(herm: HermitianAdjacency, degree: np.ndarray, kmax: int) -> list[np.ndarray]:
    """Alpha-weighted walk-count matrices r_1..r_kmax by the three-term recurrence.

    r_1 = A_alpha, r_2 = A_alpha^2 - D, and for k >= 3
    r_k = r_{k-1} A_alpha - r_{k-2} (D - I).
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    a = herm.matrix
    n = a.shape[0]
    d = np.diag(degree.astype(np.float64))
    out = [a]
    if kmax >= 2:
        out.append(a @ a - d)
    for _ in range(3, kmax + 1):
        out.append(out[-1] @ a - out[-2] @ (d - np.eye(n)))
    return out


def zeta_log_series(tables: WalkCountTables, alpha: complex, kmax: int) -> np.ndarray:
    """Coefficients c_1..c_kmax with c_k = sum_r alpha^r * (tailless cycle count)."""
    if kmax > tables.kmax:
        raise ValueError(f"tables only cover k <= {tables.kmax}")
    alpha = complex(alpha)
    powers = alpha ** np.arange(tables.modulus)
    return np.array([
        np.sum(powers * tables.cycle_counts[k]) for k in range(1, kmax + 1)
    ], dtype=np.complex128)
