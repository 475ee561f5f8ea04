"""Directed simple graphs with paired oriented-edge indexing.

A :class:`DirectedGraph` is a loop-free simple digraph on vertices
``0..n-1``.  Every analysis in this package runs on the *underlying*
undirected graph as well, so alongside the directed edge set we expose:

* the classification of an ordered vertex pair as bidirected, forward,
  backward or non-adjacent (:class:`PairKind`),
* an index of the ``2m`` oriented edges obtained by orienting each of the
  ``m`` undirected edges both ways, with the pairing convention that entry
  ``m + i`` is the reverse of entry ``i`` (:class:`OrientedEdgeIndex`),
* per-vertex neighborhood profiles split by pair kind
  (:class:`NeighborhoodProfile`).

The canonical order of the first ``m`` oriented edges is ascending
``(min(u,v), max(u,v))`` with the orientation fixed to the lexicographically
smaller ordered pair.  Any consistent order only conjugates the edge-level
matrices by a permutation, but fixing one makes every build reproducible
bit for bit.
"""
from __future__ import annotations

import enum
from typing import Iterable

import numpy as np


class PairKind(enum.Enum):
    """How an ordered vertex pair (u, v) relates to the edge set."""

    BIDIRECTED = "bidirected"
    FORWARD = "forward"
    BACKWARD = "backward"
    NON_ADJACENT = "non_adjacent"


class DirectedGraph:
    """Simple digraph without self-loops on vertices ``0..n-1``.

    Params
    ------
    n (int): number of vertices.
    edges (iterable of (int, int)): directed edges.  Self-loops, endpoints
        out of range and duplicate directed edges are rejected; duplicates
        usually indicate a buggy generator upstream, so they are an error
        rather than silently coalesced.

    The instance is immutable after construction and safe to share between
    workers.
    """

    __slots__ = ("n", "edges", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        edge_list = [(int(u), int(v)) for u, v in edges]
        seen = set()
        for u, v in edge_list:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if (u, v) in seen:
                raise ValueError(f"duplicate directed edge ({u}, {v})")
            seen.add((u, v))
        self.n = int(n)
        self.edges = tuple(sorted(seen))
        self._edge_set = frozenset(seen)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set

    def pair_kind(self, u: int, v: int) -> PairKind:
        """Classify the ordered pair (u, v).

        Bidirected iff both (u,v) and (v,u) are edges, forward iff only
        (u,v), backward iff only (v,u), otherwise non-adjacent.
        """
        if u == v:
            raise ValueError("pair classification needs two distinct vertices")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"pair ({u}, {v}) outside vertex range 0..{self.n - 1}")
        uv = (u, v) in self._edge_set
        vu = (v, u) in self._edge_set
        if uv and vu:
            return PairKind.BIDIRECTED
        if uv:
            return PairKind.FORWARD
        if vu:
            return PairKind.BACKWARD
        return PairKind.NON_ADJACENT

    def underlying_pairs(self) -> list[tuple[int, int]]:
        """Sorted (u < v) undirected edges of the underlying graph."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.edges})

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={len(self.edges)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> DirectedGraph:
    """Validate and build a :class:`DirectedGraph` (constructor alias)."""
    return DirectedGraph(n, edges)


class OrientedEdgeIndex:
    """Index of the 2m oriented edges of the underlying graph.

    Entry ``i`` for ``i < m`` is the canonical orientation of the i-th
    undirected edge, and entry ``m + i`` is its reverse, so
    ``reverse(i) == (i + m) % (2 m)``.

    Attributes
    ----------
    m: number of undirected edges.
    edges: tuple of 2m ordered pairs.
    heads / tails: int arrays with the initial and terminal vertex of each
        oriented edge (``edges[i] == (heads[i], tails[i])``).
    """

    __slots__ = ("m", "edges", "heads", "tails", "_index")

    def __init__(self, g: DirectedGraph):
        first = g.underlying_pairs()
        self.m = len(first)
        ordered = first + [(v, u) for u, v in first]
        self.edges = tuple(ordered)
        self.heads = np.array([e[0] for e in ordered], dtype=np.int64).reshape(-1)
        self.tails = np.array([e[1] for e in ordered], dtype=np.int64).reshape(-1)
        self._index = {e: i for i, e in enumerate(ordered)}

    def __len__(self) -> int:
        return 2 * self.m

    def edge_at(self, i: int) -> tuple[int, int]:
        return self.edges[i]

    def index_of(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an oriented edge of the graph") from None

    def reverse(self, i: int) -> int:
        return i + self.m if i < self.m else i - self.m


def index_oriented_edges(g: DirectedGraph) -> OrientedEdgeIndex:
    """Build the paired oriented-edge index of ``g``."""
    return OrientedEdgeIndex(g)


class NeighborhoodProfile:
    """Per-vertex neighbor sets split by pair kind, plus degrees.

    ``in_only[u]`` holds v with only the edge (v, u), ``out_only[u]`` holds
    v with only (u, v), ``bidirected[u]`` holds v with both.  ``degree`` is
    the sum of the three set sizes, i.e. the number of undirected neighbors,
    and sums to 2m over all vertices.
    """

    __slots__ = ("n", "in_only", "out_only", "bidirected", "neighbors",
                 "in_degree", "out_degree", "bi_degree", "degree")

    def __init__(self, g: DirectedGraph):
        n = g.n
        ins: list[set[int]] = [set() for _ in range(n)]
        outs: list[set[int]] = [set() for _ in range(n)]
        for u, v in g.edges:
            outs[u].add(v)
            ins[v].add(u)
        self.n = n
        self.bidirected = tuple(sorted(outs[u] & ins[u]) for u in range(n))
        self.out_only = tuple(sorted(outs[u] - ins[u]) for u in range(n))
        self.in_only = tuple(sorted(ins[u] - outs[u]) for u in range(n))
        self.neighbors = tuple(sorted(outs[u] | ins[u]) for u in range(n))
        self.bi_degree = np.array([len(s) for s in self.bidirected], dtype=np.int64)
        self.out_degree = np.array([len(s) for s in self.out_only], dtype=np.int64)
        self.in_degree = np.array([len(s) for s in self.in_only], dtype=np.int64)
        self.degree = self.bi_degree + self.out_degree + self.in_degree

    def degree_matrix(self) -> np.ndarray:
        """Diagonal degree matrix D as a dense float array."""
        return np.diag(self.degree.astype(np.float64))


def neighborhoods(g: DirectedGraph) -> NeighborhoodProfile:
    return NeighborhoodProfile(g)
