"""Message passing on sparse block models and its linearization.

``bp_update`` runs one synchronous sweep of the sparse-regime message
update: the message from u to a neighbor v is the prior, damped by the
auxiliary external field h (the aggregate pull of all non-neighbors),
times the product over the other neighbors w of the affinity-mixed
incoming messages.  Messages live on the oriented edges of the underlying
graph and stay on the probability simplex.

Around the uniform fixed point the update is linear: stacking the
perturbations of all 2m messages into a 2m x K matrix, one sweep is
``B @ mat @ T.T`` with B the non-backtracking edge adjacency and
T = c_matrix / c.  Flattened column-major (all first components, then all
second components, ...), that is exactly multiplication by kron(T, B),
which ties the mixing matrix spectrum to the edge-matrix spectrum.

``circulant_spectrum`` gives closed forms for the two circulant mixing
patterns used in that analysis; both have a single real eigenvalue, and
the biased pattern's remaining eigenvalues are purely imaginary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph, NeighborhoodProfile


@dataclass(frozen=True)
class BpModel:
    """Uniform-prior block model for message passing.

    ``c_matrix[a, b]`` is the affinity between cluster a and cluster b
    (edge probability times n).  Under the uniform prior the common degree
    is c = row_sum / K, which requires near-equal row sums; ``mixing``
    is T = c_matrix / c.
    """

    k: int
    c_matrix: np.ndarray

    def __post_init__(self):
        c_matrix = np.asarray(self.c_matrix, dtype=float)
        if c_matrix.shape != (self.k, self.k):
            raise ValueError(f"c_matrix must be {self.k} x {self.k}")
        if np.any(c_matrix < 0):
            raise ValueError("affinities must be non-negative")
        object.__setattr__(self, "c_matrix", c_matrix)
        sums = c_matrix.sum(axis=1) / self.k
        if sums.max() - sums.min() > 1e-9 * max(sums.max(), 1.0):
            raise ValueError("c_matrix row sums must be equal (degree homogeneity)")

    @property
    def prior(self) -> np.ndarray:
        return np.full(self.k, 1.0 / self.k)

    @property
    def common_degree(self) -> float:
        return float(self.c_matrix.sum(axis=1).mean() / self.k)

    @property
    def mixing(self) -> np.ndarray:
        return self.c_matrix / self.common_degree


def uniform_messages(g: DirectedGraph, k: int) -> np.ndarray:
    """One simplex-uniform message per oriented edge of the underlying graph."""
    from .graph import OrientedEdgeIndex

    index = OrientedEdgeIndex(g)
    return np.full((2 * index.m, k), 1.0 / k)


def marginals(model: BpModel, g: DirectedGraph, messages: np.ndarray) -> np.ndarray:
    """Per-vertex cluster marginals from the current messages."""
    from .graph import OrientedEdgeIndex

    index = OrientedEdgeIndex(g)
    profile = NeighborhoodProfile(g)
    mixed = messages @ model.c_matrix.T  # mixed[e, a] = sum_b c[a, b] msg[e, b]
    out = np.zeros((g.n, model.k))
    for u in range(g.n):
        belief = model.prior.copy()
        for w in profile.neighbors[u]:
            belief = belief * mixed[index.index_of(w, u)]
        total = belief.sum()
        out[u] = belief / total if total > 0 else model.prior
    return out


def external_field(model: BpModel, node_marginals: np.ndarray) -> np.ndarray:
    """h[a] = (1/N) sum_w sum_b c[a, b] marginal_w[b]."""
    n = node_marginals.shape[0]
    return (model.c_matrix @ node_marginals.sum(axis=0)) / n


def bp_update(model: BpModel, g: DirectedGraph, messages: np.ndarray) -> np.ndarray:
    """One synchronous sweep; returns renormalized messages.

    The field is recomputed from the marginals implied by the incoming
    messages.  A message whose unnormalized update is all zero has no
    consistent renormalization and is reported as an error.
    """
    from .graph import OrientedEdgeIndex

    index = OrientedEdgeIndex(g)
    two_m = 2 * index.m
    messages = np.asarray(messages, dtype=float)
    if messages.shape != (two_m, model.k):
        raise ValueError(f"messages must have shape ({two_m}, {model.k})")
    if np.any(messages < -1e-12) or np.any(np.abs(messages.sum(axis=1) - 1.0) > 1e-9):
        raise ValueError("messages must be simplex vectors")
    profile = NeighborhoodProfile(g)
    h = external_field(model, marginals(model, g, messages))
    damp = np.exp(-h)
    mixed = messages @ model.c_matrix.T
    new = np.empty_like(messages)
    for u in range(g.n):
        incoming = [index.index_of(w, u) for w in profile.neighbors[u]]
        terms = [mixed[e] for e in incoming]
        # Leave-one-out products via prefix/suffix, avoiding division.
        prefix = [np.ones(model.k)]
        for t in terms:
            prefix.append(prefix[-1] * t)
        suffix = [np.ones(model.k)]
        for t in reversed(terms):
            suffix.append(suffix[-1] * t)
        suffix.reverse()
        for slot, v in enumerate(profile.neighbors[u]):
            product = prefix[slot] * suffix[slot + 1]
            value = model.prior * damp * product
            total = value.sum()
            if total <= 0.0:
                raise ValueError(f"message update underflow on edge ({u}, {v})")
            new[index.index_of(u, v)] = value / total
    return new


@dataclass(frozen=True)
class PerturbationState:
    """Flattened perturbation of all messages around the uniform point.

    ``delta`` stacks the 2m x K perturbation matrix column-major: first
    every edge's component for cluster 1, then for cluster 2, and so on.
    ``mat`` recovers the 2m x K matrix view.
    """

    delta: np.ndarray
    edge_count: int
    k: int

    def __post_init__(self):
        delta = np.asarray(self.delta, dtype=np.complex128).reshape(-1)
        if delta.shape[0] != self.edge_count * self.k:
            raise ValueError(
                f"delta must have length {self.edge_count * self.k}, got {delta.shape[0]}"
            )
        object.__setattr__(self, "delta", delta)

    @property
    def mat(self) -> np.ndarray:
        return self.delta.reshape((self.edge_count, self.k), order="F")

    @classmethod
    def from_mat(cls, mat: np.ndarray) -> "PerturbationState":
        mat = np.asarray(mat, dtype=np.complex128)
        return cls(mat.flatten(order="F"), mat.shape[0], mat.shape[1])


def linearized_step(b: np.ndarray, t: np.ndarray, state: PerturbationState) -> PerturbationState:
    """One linearized sweep: mat(delta') = B @ mat(delta) @ T^T.

    Equivalent to multiplying the flattened state by kron(T, B).
    """
    b = np.asarray(b)
    t = np.asarray(t)
    if b.shape != (state.edge_count, state.edge_count):
        raise ValueError(f"B must be {state.edge_count} x {state.edge_count}")
    if t.shape != (state.k, state.k):
        raise ValueError(f"T must be {state.k} x {state.k}")
    return PerturbationState.from_mat(b @ state.mat @ t.T)


@dataclass(frozen=True)
class CirculantPattern:
    """One of the two circulant mixing patterns.

    kind "bias": baseline 1/2 everywhere, e one step forward around the
    cluster cycle, 1 - e one step backward, with e in (0.5, 1).
    kind "two-level": f one step forward, g elsewhere, with f > g > 0.
    """

    kind: str
    k: int
    params: tuple[float, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("need K >= 2")
        if self.kind == "bias":
            if self.k < 3:
                raise ValueError("the bias pattern needs K >= 3 (its forward and "
                                 "backward offsets collide for K = 2)")
            (e,) = self.params
            if not 0.5 < e < 1.0:
                raise ValueError(f"bias parameter must lie in (0.5, 1), got {e}")
        elif self.kind == "two-level":
            f, g = self.params
            if not f > g > 0:
                raise ValueError(f"need f > g > 0, got f = {f}, g = {g}")
        else:
            raise ValueError(f"unknown circulant kind {self.kind!r}")

    def first_row(self) -> np.ndarray:
        row = np.empty(self.k)
        if self.kind == "bias":
            (e,) = self.params
            row[:] = 0.5
            row[1] = e
            row[-1] = 1.0 - e
        else:
            f, g = self.params
            row[:] = g
            row[1] = f
        return row

    def matrix(self) -> np.ndarray:
        """Explicit circulant matrix: entry (a, b) = row[(b - a) mod K]."""
        row = self.first_row()
        idx = (np.arange(self.k)[None, :] - np.arange(self.k)[:, None]) % self.k
        return row[idx]


def circulant_spectrum(pattern: CirculantPattern) -> np.ndarray:
    """Closed-form eigenvalues, index k = 0..K-1.

    bias: K/2 at k = 0, i (2e - 1) sin(2 pi k / K) otherwise, so every
    non-zero index is purely imaginary.  two-level: f + (K - 1) g at
    k = 0, (f - g) exp(2 pi i k / K) otherwise.
    """
    k = pattern.k
    out = np.empty(k, dtype=np.complex128)
    if pattern.kind == "bias":
        (e,) = pattern.params
        out[0] = k / 2.0
        for j in range(1, k):
            out[j] = 1j * (2.0 * e - 1.0) * np.sin(2.0 * np.pi * j / k)
    else:
        f, g = pattern.params
        out[0] = f + (k - 1) * g
        for j in range(1, k):
            out[j] = (f - g) * np.exp(2j * np.pi * j / k)
    return out
