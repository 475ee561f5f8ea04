import numpy as np
import pytest

from cnbt import DirectedGraph


def random_digraph(rng: np.random.Generator, n: int, p: float) -> DirectedGraph:
    """Ordered-pair Bernoulli digraph, the workhorse of the randomized tests."""
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(mask))]
    return DirectedGraph(n, edges)


def sorted_eigs(values: np.ndarray, decimals: int = 9) -> np.ndarray:
    """Sort a complex multiset by rounded (real, imag) so that numerical
    jitter cannot flip the order of near-equal entries."""
    values = np.asarray(values, dtype=np.complex128).reshape(-1)
    order = np.lexsort((np.round(values.imag, decimals), np.round(values.real, decimals)))
    return values[order]


@pytest.fixture
def fixture_graph():
    from fixture_4v import EDGES, N

    return DirectedGraph(N, EDGES)
