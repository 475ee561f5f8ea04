"""Edge-type weighted matrices of a directed graph.

Three families are built here, all parameterized by a unit-modulus complex
number ``alpha`` that must be a root of unity (so rotation bookkeeping stays
finite):

* the Hermitian adjacency matrix ``A_alpha`` (n x n), encoding bidirected
  pairs as 1, forward edges as alpha and backward edges as conj(alpha),
* the complex non-backtracking matrix ``B_alpha = B @ Lambda`` (2m x 2m),
  where B is the 0/1 non-backtracking edge adjacency and Lambda carries the
  per-edge type weights,
* the reduced block matrix ``[[A_alpha, -I], [D - I, 0]]`` (2n x 2n) that
  receives the edge-to-node transfer of B_alpha eigenvectors.

Everything is built dense by default; pass ``sparse=True`` where supported
to get CSR matrices for the clustering path on larger graphs.  Entries are
exact products of {0, 1} and a power of alpha, no rounding happens here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import DirectedGraph, NeighborhoodProfile, OrientedEdgeIndex, PairKind

MAX_ROOT_ORDER = 64
_UNIT_TOL = 1e-12
_ROOT_TOL = 1e-9


def unit_root_order(alpha: complex) -> int:
    """Smallest positive R with alpha**R == 1, up to order 64.

    Raises ValueError when alpha is not unit-modulus (tolerance 1e-12) or
    not a low-order root of unity (tolerance 1e-9); the walk tables index
    rotations mod R, so a finite R is required.
    """
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > _UNIT_TOL:
        raise ValueError(f"alpha must have modulus 1, got |alpha| = {abs(alpha)!r}")
    power = 1.0 + 0.0j
    for r in range(1, MAX_ROOT_ORDER + 1):
        power *= alpha
        if abs(power - 1.0) <= _ROOT_TOL:
            return r
    raise ValueError(
        f"alpha = {alpha!r} is not a root of unity of order <= {MAX_ROOT_ORDER}"
    )


@dataclass(frozen=True)
class HermitianAdjacency:
    """A_alpha together with its three 0/1 parts.

    ``matrix == part_bi + alpha * part_fwd + conj(alpha) * part_bwd`` holds
    entrywise, ``part_fwd.T == part_bwd`` and ``part_bi`` is symmetric, so
    the matrix is Hermitian by construction.
    """

    alpha: complex
    order: int
    matrix: np.ndarray
    part_bi: np.ndarray
    part_fwd: np.ndarray
    part_bwd: np.ndarray


def hermitian_adjacency(g: DirectedGraph, alpha: complex) -> HermitianAdjacency:
    """Build the Hermitian adjacency matrix of ``g`` at weight ``alpha``."""
    order = unit_root_order(alpha)
    alpha = complex(alpha)
    n = g.n
    part_bi = np.zeros((n, n))
    part_fwd = np.zeros((n, n))
    part_bwd = np.zeros((n, n))
    for u, v in g.edges:
        if g.has_edge(v, u):
            part_bi[u, v] = 1.0
            part_bi[v, u] = 1.0
        else:
            part_fwd[u, v] = 1.0
            part_bwd[v, u] = 1.0
    matrix = part_bi + alpha * part_fwd + np.conj(alpha) * part_bwd
    return HermitianAdjacency(alpha, order, matrix, part_bi, part_fwd, part_bwd)


def edge_type_weights(g: DirectedGraph, index: OrientedEdgeIndex, alpha: complex) -> np.ndarray:
    """Per-oriented-edge weight: 1 bidirected, alpha forward, conj backward."""
    alpha = complex(alpha)
    lut = {
        PairKind.BIDIRECTED: 1.0 + 0.0j,
        PairKind.FORWARD: alpha,
        PairKind.BACKWARD: np.conj(alpha),
    }
    return np.array([lut[g.pair_kind(u, v)] for u, v in index.edges], dtype=np.complex128)


def nbt_matrix(index: OrientedEdgeIndex) -> np.ndarray:
    """Dense 0/1 non-backtracking matrix: (e, f) = 1 iff t_e = i_f, i_e != t_f."""
    heads, tails = index.heads, index.tails
    follows = tails[:, None] == heads[None, :]
    backtracks = heads[:, None] == tails[None, :]
    return (follows & ~backtracks).astype(np.float64)


@dataclass(frozen=True)
class CnbtMatrix:
    """B_alpha = B Lambda with its parts and the edge index it lives on.

    ``part_*`` select the columns of B by the type of the continued edge f,
    so ``matrix == part_bi + alpha * part_fwd + conj(alpha) * part_bwd``.
    Parts are only materialized on the dense path.
    """

    alpha: complex
    order: int
    index: OrientedEdgeIndex
    b: np.ndarray | sp.spmatrix
    weights: np.ndarray
    matrix: np.ndarray | sp.spmatrix
    part_bi: np.ndarray | None
    part_fwd: np.ndarray | None
    part_bwd: np.ndarray | None

    @property
    def lambda_matrix(self) -> np.ndarray:
        return np.diag(self.weights)


def cnbt_matrix(g: DirectedGraph, alpha: complex, sparse: bool = False) -> CnbtMatrix:
    """Build the complex non-backtracking matrix of ``g`` at weight ``alpha``."""
    order = unit_root_order(alpha)
    alpha = complex(alpha)
    index = OrientedEdgeIndex(g)
    weights = edge_type_weights(g, index, alpha)
    if sparse:
        b = _nbt_matrix_sparse(index)
        matrix = (b @ sp.diags(weights)).tocsr()
        return CnbtMatrix(alpha, order, index, b, weights, matrix, None, None, None)
    b = nbt_matrix(index)
    matrix = b * weights[None, :]
    # Classify columns by pair kind, not by weight value: low-order alpha
    # (1 or -1) makes the forward and backward weights collide.
    kinds = [g.pair_kind(u, v) for u, v in index.edges]
    is_bi = np.array([k is PairKind.BIDIRECTED for k in kinds], dtype=bool)
    is_fwd = np.array([k is PairKind.FORWARD for k in kinds], dtype=bool)
    is_bwd = np.array([k is PairKind.BACKWARD for k in kinds], dtype=bool)
    part_bi = b * is_bi[None, :]
    part_fwd = b * is_fwd[None, :]
    part_bwd = b * is_bwd[None, :]
    return CnbtMatrix(alpha, order, index, b, weights, matrix, part_bi, part_fwd, part_bwd)


def _nbt_matrix_sparse(index: OrientedEdgeIndex) -> sp.csr_matrix:
    two_m = 2 * index.m
    heads, tails = index.heads, index.tails
    out_at: list[list[int]] = [[] for _ in range(int(heads.max()) + 1)] if two_m else []
    for f, h in enumerate(heads):
        out_at[h].append(f)
    rows, cols = [], []
    for e in range(two_m):
        t, h = tails[e], heads[e]
        for f in out_at[t]:
            if tails[f] != h:
                rows.append(e)
                cols.append(f)
    data = np.ones(len(rows))
    return sp.csr_matrix((data, (rows, cols)), shape=(two_m, two_m))


@dataclass(frozen=True)
class ReducedMatrix:
    """The 2n x 2n block matrix [[A_alpha, -I], [D - I, 0]]."""

    alpha: complex
    matrix: np.ndarray | sp.spmatrix


def reduced_matrix(g: DirectedGraph, alpha: complex, sparse: bool = False) -> ReducedMatrix:
    """Build the reduced companion of B_alpha acting on stacked (out, in) vectors."""
    herm = hermitian_adjacency(g, alpha)
    degree = NeighborhoodProfile(g).degree.astype(np.float64)
    n = g.n
    if sparse:
        a = sp.csr_matrix(herm.matrix)
        eye = sp.identity(n, dtype=np.complex128, format="csr")
        dm1 = sp.diags(degree - 1.0).astype(np.complex128)
        zero = sp.csr_matrix((n, n), dtype=np.complex128)
        matrix = sp.bmat([[a, -eye], [dm1, zero]], format="csr")
        return ReducedMatrix(complex(alpha), matrix)
    matrix = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    matrix[:n, :n] = herm.matrix
    matrix[:n, n:] = -np.eye(n)
    matrix[n:, :n] = np.diag(degree - 1.0)
    return ReducedMatrix(complex(alpha), matrix)
