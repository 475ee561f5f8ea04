"""Aggregating edge vectors to vertices without losing the spectrum.

An eigenvector of the 2m x 2m complex non-backtracking matrix indexes
oriented edges.  Its out- and in-aggregations to vertices, stacked as
(out, in), form an eigenvector of the reduced 2n x 2n block matrix

    [[A_alpha, -I], [D - I, 0]]

with the same eigenvalue.  That is why the clustering path can solve a
2n-dimensional eigenproblem instead of the 2m-dimensional one.
"""
import numpy as np

from cnbt import (
    cnbt_matrix,
    eigendecompose,
    eigpair_transfer,
    node_vectors,
    reduced_matrix,
    verify_edge_to_node,
)
from cnbt.graph import DirectedGraph

rng = np.random.default_rng(17)
n = 14
edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.25]
g = DirectedGraph(n, edges)
m = len(g.underlying_pairs())
alpha = np.exp(2j * np.pi / 3)
print(f"{g} with m = {m} undirected edges; alpha = exp(2 pi i / 3)")

print("\nidentity check on random edge vectors:")
for _ in range(3):
    vec = rng.standard_normal(2 * m) + 1j * rng.standard_normal(2 * m)
    residual = verify_edge_to_node(g, alpha, vec)
    print(f"  residual {residual:.2e} (bound {1e-10 * (1 + np.linalg.norm(vec)):.2e})")

cnbt = cnbt_matrix(g, alpha)
pairs = eigendecompose(cnbt.matrix, 6)
reduced_spectrum = np.linalg.eigvals(reduced_matrix(g, alpha).matrix)
print("\ntop eigenpairs of the edge matrix, transferred to the reduced one:")
for value, vector in zip(pairs.values, pairs.vectors.T):
    residual, flagged = eigpair_transfer(g, alpha, value, vector)
    if flagged:
        print(f"  {value:.4f}: aggregation is numerically zero (flagged)")
        continue
    nearest = np.min(np.abs(reduced_spectrum - value))
    print(f"  {value:.4f}: transfer residual {residual:.2e}, "
          f"distance to reduced spectrum {nearest:.2e}")

vec = np.zeros(2 * m)
vec[0] = 1.0
nv = node_vectors(g, alpha, vec)
u0, v0 = cnbt.index.edge_at(0)
print(f"\nindicator of oriented edge {cnbt.index.edge_at(0)} aggregates to:")
print(f"  out[{u0}] = {nv.out_vector[u0]:.3f} (type weight of the pair), "
      f"in[{v0}] = {nv.in_vector[v0]:.3f}")
