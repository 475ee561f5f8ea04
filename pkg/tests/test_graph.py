import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnbt import NeighborhoodProfile, PairKind, build_graph, index_oriented_edges
from conftest import random_digraph


def test_build_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(3, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        build_graph(2, [(0, 2)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(ValueError, match="duplicate"):
        build_graph(2, [(0, 1), (0, 1)])


def test_empty_graph():
    g = build_graph(3, [])
    assert g.n == 3
    assert g.edges == ()
    assert index_oriented_edges(g).m == 0


def test_edges_sorted_deterministically():
    g = build_graph(4, [(3, 1), (0, 2), (0, 1)])
    assert g.edges == ((0, 1), (0, 2), (3, 1))


def test_fixture_pair_kinds(fixture_graph):
    g = fixture_graph
    assert g.pair_kind(0, 1) is PairKind.BIDIRECTED
    assert g.pair_kind(1, 0) is PairKind.BIDIRECTED
    assert g.pair_kind(0, 2) is PairKind.FORWARD
    assert g.pair_kind(2, 0) is PairKind.BACKWARD
    assert g.pair_kind(0, 3) is PairKind.NON_ADJACENT
    with pytest.raises(ValueError):
        g.pair_kind(1, 1)


def test_fixture_oriented_index(fixture_graph):
    index = index_oriented_edges(fixture_graph)
    assert index.m == 5
    assert len(index) == 10
    # First five are canonical orientations in ascending order.
    assert index.edges[:5] == ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))
    for i in range(5):
        u, v = index.edge_at(i)
        assert index.edge_at(5 + i) == (v, u)
        assert index.reverse(i) == 5 + i
        assert index.reverse(5 + i) == i


def test_single_edge_index():
    index = index_oriented_edges(build_graph(2, [(0, 1)]))
    assert index.edges == ((0, 1), (1, 0))


def test_fixture_neighborhoods(fixture_graph):
    p = NeighborhoodProfile(fixture_graph)
    assert p.bidirected[0] == [1]
    assert p.out_only[0] == [2]
    assert p.in_only[2] == [0, 1]
    assert list(p.degree) == [2, 3, 3, 2]
    assert p.degree.sum() == 2 * index_oriented_edges(fixture_graph).m


@given(st.integers(2, 8), st.integers(0, 2**32 - 1), st.floats(0.1, 0.6))
@settings(max_examples=60, deadline=None)
def test_random_graph_invariants(n, seed, p):
    rng = np.random.default_rng(seed)
    g = random_digraph(rng, n, p)
    index = index_oriented_edges(g)
    assert len(index) == 2 * index.m
    for i in range(index.m):
        u, v = index.edge_at(i)
        assert (u, v) <= (v, u)
        assert index.edge_at(index.reverse(i)) == (v, u)
    profile = NeighborhoodProfile(g)
    assert profile.degree.sum() == 2 * index.m
    assert profile.out_degree.sum() == profile.in_degree.sum()
    # Pair classification agrees with raw edge membership, exhaustively.
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            kind = g.pair_kind(u, v)
            uv, vu = g.has_edge(u, v), g.has_edge(v, u)
            expected = (
                PairKind.BIDIRECTED if uv and vu
                else PairKind.FORWARD if uv
                else PairKind.BACKWARD if vu
                else PairKind.NON_ADJACENT
            )
            assert kind is expected
            mirror = g.pair_kind(v, u)
            if kind is PairKind.FORWARD:
                assert mirror is PairKind.BACKWARD
            elif kind in (PairKind.BIDIRECTED, PairKind.NON_ADJACENT):
                assert mirror is kind
