"""Benchmark graph generators with planted circular cluster structure.

Two regimes are covered.  The dense model samples each unordered vertex
pair once with probability p and then orients the edge by the K x K matrix
F (F[a, b] + F[b, a] = 1), so it never produces bidirected pairs.  The
sparse models sample every ordered pair independently with probability
Gamma[a, b] / n (optionally degree-corrected by Pareto weights), so
reciprocal pairs can occur.

Both use the same circular pattern between clusters: pairs one step
forward around the cluster cycle are "correct", one step backward are
"reverse", everything else (including within-cluster) is baseline.  The
circular pattern needs K >= 3; for K = 2 the forward and backward rules
collide, so an explicit F / Gamma matrix must be supplied instead.

Sampling draws per-pair uniforms in a fixed canonical order (row-major
over pairs), so a (params, seed) pair reproduces the same graph exactly
regardless of the execution environment.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph


def circular_orientation_matrix(k: int, eta: float) -> np.ndarray:
    """Orientation matrix F: 1 - eta one step forward, eta one step back, 0.5 otherwise."""
    if k < 3:
        raise ValueError("the circular pattern needs K >= 3 (forward and backward "
                         "rules collide for K = 2); supply an explicit matrix instead")
    if not 0.0 <= eta <= 0.5:
        raise ValueError(f"eta must lie in [0, 0.5], got {eta}")
    f = np.full((k, k), 0.5)
    for a in range(k):
        f[a, (a + 1) % k] = 1.0 - eta
        f[(a + 1) % k, a] = eta
    return f


def circular_rate_matrix(k: int, correct: float, reverse: float, intra: float) -> np.ndarray:
    """Rate matrix Gamma with the circular pattern (baseline on all other pairs)."""
    if k < 3:
        raise ValueError("the circular pattern needs K >= 3; supply an explicit "
                         "matrix instead for smaller K")
    gamma = np.full((k, k), float(intra))
    for a in range(k):
        gamma[a, (a + 1) % k] = correct
        gamma[(a + 1) % k, a] = reverse
    return gamma


@dataclass(frozen=True)
class DenseDsbmParams:
    """Dense model parameters: edge probability p, orientation strength eta."""

    k: int
    n: int
    p: float
    eta: float
    f: np.ndarray | None = None

    def orientation(self) -> np.ndarray:
        f = circular_orientation_matrix(self.k, self.eta) if self.f is None else np.asarray(self.f, dtype=float)
        if f.shape != (self.k, self.k):
            raise ValueError(f"F must be {self.k} x {self.k}")
        if not np.allclose(f + f.T, 1.0, atol=1e-12):
            raise ValueError("F must satisfy F[a, b] + F[b, a] = 1 for all pairs")
        return f

    def validate(self) -> None:
        if self.n % self.k != 0:
            raise ValueError(f"n = {self.n} must be divisible by K = {self.k}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        self.orientation()


def block_labels(n: int, k: int) -> np.ndarray:
    return np.repeat(np.arange(k, dtype=np.int64), n // k)


def dense_dsbm_sample(params: DenseDsbmParams, seed: int) -> tuple[DirectedGraph, np.ndarray]:
    """Sample the dense model: one presence draw and one orientation draw per pair."""
    params.validate()
    n, k = params.n, params.k
    f = params.orientation()
    labels = block_labels(n, k)
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = []
    for u in range(n - 1):
        others = np.arange(u + 1, n)
        present = rng.random(others.shape[0]) < params.p
        forward = rng.random(others.shape[0]) < f[labels[u], labels[others]]
        for v, fwd in zip(others[present], forward[present]):
            edges.append((u, int(v)) if fwd else (int(v), u))
    return DirectedGraph(n, edges), labels


def gamma_from(c: float, epsilon: float, eta: float) -> tuple[float, float, float]:
    """Closed-form (correct, reverse, intra) rates from degree scale c and ratios.

    correct / reverse = epsilon and reverse / intra = eta hold exactly, and
    the three rates sum to 2 c.
    """
    if c <= 0 or epsilon <= 0 or eta <= 0:
        raise ValueError("c, epsilon and eta must all be positive")
    denom = 1.0 + eta * (1.0 + epsilon)
    correct = 2.0 * c * epsilon * eta / denom
    reverse = 2.0 * c * eta / denom
    intra = 2.0 * c / denom
    return correct, reverse, intra


@dataclass(frozen=True)
class SparseSbmParams:
    """Sparse model parameters (degree scale c, pattern ratios epsilon and eta)."""

    k: int
    n: int
    c: float
    epsilon: float
    eta: float
    pareto_exponent: float = 2.5

    def rates(self) -> tuple[float, float, float]:
        return gamma_from(self.c, self.epsilon, self.eta)

    def validate(self) -> None:
        if self.n % self.k != 0:
            raise ValueError(f"n = {self.n} must be divisible by K = {self.k}")
        if self.pareto_exponent <= 1.0:
            raise ValueError("pareto exponent must exceed 1 for a finite mean")
        self.rates()


@dataclass
class SampleDiagnostics:
    clip_count: int = 0
    pair_count: int = 0

    @property
    def clip_fraction(self) -> float:
        return self.clip_count / self.pair_count if self.pair_count else 0.0


def sample_from_rates(n: int, labels: np.ndarray, gamma: np.ndarray,
                      theta: np.ndarray, seed: int) -> tuple[DirectedGraph, SampleDiagnostics]:
    """Sample every ordered pair (u, v) with probability theta_u theta_v Gamma[a, b] / n.

    Probabilities above 1 are clipped and counted; a clip fraction above 1%
    is surfaced by the caller as a model warning.
    """
    rng = np.random.default_rng(seed)
    diag = SampleDiagnostics(pair_count=n * (n - 1))
    edges: list[tuple[int, int]] = []
    for u in range(n):
        others = np.concatenate([np.arange(u), np.arange(u + 1, n)])
        raw = theta[u] * theta[others] * gamma[labels[u], labels[others]] / n
        clipped = np.minimum(raw, 1.0)
        diag.clip_count += int((raw > 1.0).sum())
        hit = rng.random(others.shape[0]) < clipped
        for v in others[hit]:
            edges.append((u, int(v)))
    return DirectedGraph(n, edges), diag


def sparse_sbm_sample(params: SparseSbmParams, model: str, seed: int,
                      ) -> tuple[DirectedGraph, np.ndarray, np.ndarray, SampleDiagnostics]:
    """Sample the sparse model ("dsbm") or its degree-corrected variant ("dcsbm").

    Returns (graph, labels, theta, diagnostics).  For the degree-corrected
    model theta is i.i.d. Pareto with scale 1 and the configured exponent;
    otherwise all ones.
    """
    if model not in ("dsbm", "dcsbm"):
        raise ValueError(f"unknown sparse model {model!r}")
    params.validate()
    n, k = params.n, params.k
    labels = block_labels(n, k)
    correct, reverse, intra = params.rates()
    gamma = circular_rate_matrix(k, correct, reverse, intra)
    rng = np.random.default_rng(seed)
    if model == "dcsbm":
        theta = pareto_weights(rng, n, params.pareto_exponent)
    else:
        theta = np.ones(n)
    graph, diag = sample_from_rates(n, labels, gamma, theta, seed + 1)
    return graph, labels, theta, diag


def pareto_weights(rng: np.random.Generator, n: int, exponent: float) -> np.ndarray:
    """Standard Pareto draws: scale 1, density proportional to x^-(exponent + 1)."""
    return rng.pareto(exponent, n) + 1.0
