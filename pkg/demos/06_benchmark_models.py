"""The two benchmark generators and their bookkeeping.

Dense model: every unordered pair gets an edge with probability p, then an
orientation from the K x K matrix F (rows and columns sum to one in
pairs), so no reciprocal edges appear.  Sparse models: every ordered pair
independently with probability Gamma[a, b] / n, optionally degree-corrected
with Pareto weights, so reciprocal pairs can appear and expected degrees
stay constant as n grows.
"""
import numpy as np

from cnbt import (
    DenseDsbmParams,
    NeighborhoodProfile,
    SparseSbmParams,
    circular_orientation_matrix,
    dense_dsbm_sample,
    gamma_from,
    sparse_sbm_sample,
)

print("circular orientation matrix, K=5, eta=0.1:")
print(circular_orientation_matrix(5, 0.1))

dense = DenseDsbmParams(k=5, n=500, p=0.016, eta=0.1)
graph, labels = dense_dsbm_sample(dense, seed=0)
profile = NeighborhoodProfile(graph)
print(f"\ndense sample: {len(graph.edges)} edges, mean degree "
      f"{profile.degree.mean():.2f} (expected about {(dense.n - 1) * dense.p:.2f})")
reciprocal = sum(1 for u, v in graph.edges if graph.has_edge(v, u))
print(f"reciprocal edges: {reciprocal} (the dense model orients each pair once)")

print("\nclosed-form rates from (c, epsilon, eta):")
for c, eps, eta in [(5.0, 4.0, 1.0), (5.0, 1.0, 1.0), (10.0, 8.0, 1.0)]:
    correct, reverse, intra = gamma_from(c, eps, eta)
    print(f"  c={c:4.1f} eps={eps:4.1f} eta={eta:3.1f} -> "
          f"correct={correct:6.3f} reverse={reverse:6.3f} intra={intra:6.3f} "
          f"(ratios {correct / reverse:.1f}, {reverse / intra:.1f}; sum {correct + reverse + intra:.1f})")

sparse = SparseSbmParams(k=3, n=3000, c=5.0, epsilon=4.0, eta=1.0)
graph, labels, theta, diag = sparse_sbm_sample(sparse, "dsbm", seed=0)
profile = NeighborhoodProfile(graph)
print(f"\nsparse sample: {len(graph.edges)} edges, mean degree "
      f"{profile.degree.mean():.3f}")
print("note: the three rates sum to 2c, so each vertex sees (2/K) * 2c = 4c/3")
print(f"expected neighbors at K=3; here 4c/3 = {4 * sparse.c / 3:.3f}")

dc, labels, theta, diag = sparse_sbm_sample(sparse, "dcsbm", seed=0)
profile = NeighborhoodProfile(dc)
print(f"\ndegree-corrected sample: Pareto weights with mean {theta.mean():.3f} "
      f"(theory 5/3), max {theta.max():.1f}")
print(f"mean degree {profile.degree.mean():.2f}, max degree {profile.degree.max()}, "
      f"clipped pair probabilities: {diag.clip_count}")
