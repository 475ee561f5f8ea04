import numpy as np
import pytest

from cnbt import (
    DenseDsbmParams,
    SparseSbmParams,
    circular_orientation_matrix,
    circular_rate_matrix,
    dense_dsbm_sample,
    gamma_from,
    sparse_sbm_sample,
)
from cnbt.sbm import block_labels, pareto_weights, sample_from_rates


def test_circular_orientation_pattern():
    f = circular_orientation_matrix(5, 0.1)
    assert f[1, 2] == 0.9
    assert f[2, 1] == pytest.approx(0.1)
    assert f[0, 2] == 0.5
    assert np.allclose(f + f.T, 1.0)


def test_circular_orientation_rejects_k2():
    with pytest.raises(ValueError, match="K >= 3"):
        circular_orientation_matrix(2, 0.1)


def test_dense_params_validate():
    with pytest.raises(ValueError, match="divisible"):
        DenseDsbmParams(k=3, n=100, p=0.1, eta=0.1).validate()
    with pytest.raises(ValueError, match="F must satisfy"):
        DenseDsbmParams(k=3, n=99, p=0.1, eta=0.1, f=np.eye(3)).validate()


def test_dense_p_zero_is_empty():
    graph, labels = dense_dsbm_sample(DenseDsbmParams(k=3, n=30, p=0.0, eta=0.1), seed=0)
    assert graph.edges == ()
    assert list(labels) == [0] * 10 + [1] * 10 + [2] * 10


def test_dense_never_bidirected():
    graph, _ = dense_dsbm_sample(DenseDsbmParams(k=3, n=60, p=0.5, eta=0.2), seed=1)
    edge_set = set(graph.edges)
    assert all((v, u) not in edge_set for u, v in edge_set)


def test_dense_deterministic():
    params = DenseDsbmParams(k=3, n=30, p=0.3, eta=0.1)
    g1, _ = dense_dsbm_sample(params, seed=7)
    g2, _ = dense_dsbm_sample(params, seed=7)
    assert g1 == g2


def test_dense_orientation_frequency_at_half():
    # eta = 0.5 kills the circular pattern: every orientation is a coin
    # flip, so the forward fraction sits within 3 sigma of one half.
    params = DenseDsbmParams(k=4, n=160, p=0.8, eta=0.5)
    graph, _ = dense_dsbm_sample(params, seed=3)
    forward = sum(1 for u, v in graph.edges if u < v)
    total = len(graph.edges)
    assert total > 9000
    sigma = np.sqrt(0.25 / total)
    assert abs(forward / total - 0.5) <= 3 * sigma


def test_gamma_from_pinned_example():
    correct, reverse, intra = gamma_from(5.0, 4.0, 1.0)
    assert correct == pytest.approx(40.0 / 6.0, abs=1e-12)
    assert reverse == pytest.approx(10.0 / 6.0, abs=1e-12)
    assert intra == pytest.approx(10.0 / 6.0, abs=1e-12)


def test_gamma_from_symmetric_point():
    correct, reverse, intra = gamma_from(6.0, 1.0, 1.0)
    assert correct == pytest.approx(4.0)
    assert reverse == pytest.approx(4.0)
    assert intra == pytest.approx(4.0)


def test_gamma_ratios_recovered_exactly():
    rng = np.random.default_rng(0)
    for trial in range(50):
        c = 10 ** rng.uniform(-1, 2)
        eps = 10 ** rng.uniform(-2, 2)
        eta = 10 ** rng.uniform(-2, 2)
        correct, reverse, intra = gamma_from(c, eps, eta)
        assert correct / reverse == pytest.approx(eps, rel=1e-12)
        assert reverse / intra == pytest.approx(eta, rel=1e-12)
        assert correct + reverse + intra == pytest.approx(2 * c, rel=1e-12)


def test_gamma_intra_vanishes_for_large_epsilon():
    _, _, intra = gamma_from(5.0, 1e6, 1.0)
    assert intra < 1e-4 * 5.0


def test_circular_rate_matrix_layout():
    gamma = circular_rate_matrix(3, 8.0, 2.0, 1.0)
    assert gamma[0, 1] == 8.0 and gamma[1, 2] == 8.0 and gamma[2, 0] == 8.0
    assert gamma[1, 0] == 2.0 and gamma[2, 1] == 2.0 and gamma[0, 2] == 2.0
    assert gamma[0, 0] == gamma[1, 1] == gamma[2, 2] == 1.0


def test_sparse_sample_block_rates_within_binomial_bounds():
    params = SparseSbmParams(k=3, n=600, c=6.0, epsilon=4.0, eta=1.0)
    graph, labels, theta, diag = sparse_sbm_sample(params, "dsbm", seed=5)
    assert np.all(theta == 1.0)
    assert diag.clip_count == 0
    correct, reverse, intra = params.rates()
    gamma = circular_rate_matrix(3, correct, reverse, intra)
    counts = np.zeros((3, 3))
    for u, v in graph.edges:
        counts[labels[u], labels[v]] += 1
    for a in range(3):
        for b in range(3):
            pairs = 200 * 200 - (200 if a == b else 0)
            p = gamma[a, b] / 600
            mean = pairs * p
            sigma = np.sqrt(pairs * p * (1 - p))
            assert abs(counts[a, b] - mean) <= 4 * sigma


def test_sparse_sample_deterministic():
    params = SparseSbmParams(k=3, n=120, c=5.0, epsilon=4.0, eta=1.0)
    g1 = sparse_sbm_sample(params, "dsbm", seed=11)[0]
    g2 = sparse_sbm_sample(params, "dsbm", seed=11)[0]
    assert g1 == g2


def test_sparse_rejects_unknown_model():
    params = SparseSbmParams(k=3, n=12, c=2.0, epsilon=1.0, eta=1.0)
    with pytest.raises(ValueError, match="unknown sparse model"):
        sparse_sbm_sample(params, "nope", seed=0)


def test_mean_degree_matches_rate_sum_over_k():
    # Each vertex sees (sum of the three rates) / K expected out-edges and
    # as many in-edges, so the mean neighbor count concentrates on 4c/3
    # for K = 3 (the rates sum to 2c by construction).
    params = SparseSbmParams(k=3, n=1500, c=5.0, epsilon=4.0, eta=1.0)
    degrees = []
    for seed in range(3):
        graph, _, _, _ = sparse_sbm_sample(params, "dsbm", seed)
        from cnbt import NeighborhoodProfile

        degrees.append(NeighborhoodProfile(graph).degree.mean())
    assert abs(np.mean(degrees) - 4 * 5.0 / 3) <= 0.25


def test_pareto_mean_near_theory():
    rng = np.random.default_rng(17)
    theta = pareto_weights(rng, 100_000, 2.5)
    assert np.all(theta >= 1.0)
    assert 1.60 <= theta.mean() <= 1.74


def test_dcsbm_theta_and_clipping():
    params = SparseSbmParams(k=3, n=120, c=5.0, epsilon=4.0, eta=1.0)
    graph, labels, theta, diag = sparse_sbm_sample(params, "dcsbm", seed=2)
    assert theta.shape == (120,)
    assert np.all(theta >= 1.0)
    assert diag.pair_count == 120 * 119
    # Heavy-tailed weights with an absurd degree scale must clip and count.
    big = SparseSbmParams(k=3, n=60, c=40.0, epsilon=4.0, eta=1.0)
    _, _, _, diag_big = sparse_sbm_sample(big, "dcsbm", seed=3)
    assert diag_big.clip_count > 0
    assert diag_big.clip_fraction > 0


def test_sample_from_rates_explicit_gamma():
    labels = block_labels(40, 2)
    gamma = np.array([[20.0, 2.0], [2.0, 20.0]])
    graph, diag = sample_from_rates(40, labels, gamma, np.ones(40), seed=0)
    assert graph.n == 40
    assert diag.clip_count == 0
    within = sum(1 for u, v in graph.edges if labels[u] == labels[v])
    assert within > len(graph.edges) / 2
