"""Tour of the core objects on a small 4-vertex digraph.

The graph has a bidirected pair (0 <-> 1) and four one-way edges.  We build
the oriented-edge index, the Hermitian adjacency matrix at weight i, the
complex non-backtracking matrix, and walk through the rotation bookkeeping
of a few mixed walks.
"""
import numpy as np

from cnbt import (
    DirectedGraph,
    cnbt_matrix,
    has_tail,
    hermitian_adjacency,
    index_oriented_edges,
    is_nbt,
    is_primitive,
    rotation,
)

np.set_printoptions(precision=2, suppress=True, linewidth=120)

g = DirectedGraph(4, [(0, 1), (1, 0), (0, 2), (1, 2), (2, 3), (3, 1)])
print(g)
for u, v in [(0, 1), (0, 2), (2, 0), (0, 3)]:
    print(f"  pair ({u}, {v}): {g.pair_kind(u, v).value}")

index = index_oriented_edges(g)
print(f"\n{index.m} undirected edges -> {len(index)} oriented edges:")
for i, edge in enumerate(index.edges):
    print(f"  e{i} = {edge}" + ("  (reverse of e%d)" % (i - index.m) if i >= index.m else ""))

alpha = 1j
herm = hermitian_adjacency(g, alpha)
print(f"\nHermitian adjacency at alpha = i (root order {herm.order}):")
print(herm.matrix)

cnbt = cnbt_matrix(g, alpha)
print("\nComplex non-backtracking matrix (B times the edge-type diagonal):")
print(cnbt.matrix)
print("edge-type weights:", cnbt.weights)

print("\nMixed walks and their rotation mod 4:")
walks = [
    (1, 0),                    # bidirected step, rotation 0
    (1, 2),                    # forward step, rotation 1
    (3, 2),                    # backward step, rotation -1 = 3
    (0, 1, 2, 3),              # three steps, rotation 2
    (0, 1, 2, 1),              # backtracks at the end
    (0, 1, 2, 0),              # tailless primitive cycle
    (0, 1, 2, 3, 1, 0),        # cycle whose square backtracks: has a tail
    (1, 3, 2, 1, 3, 2, 1),     # twice around a 3-cycle: not primitive
]
for walk in walks:
    closed = walk[0] == walk[-1] and len(walk) > 2
    flags = [f"len {len(walk) - 1}", f"rot {rotation(g, walk, 4)}",
             "NBT" if is_nbt(walk) else "backtracking"]
    if closed and is_nbt(walk):
        flags.append("tail" if has_tail(walk) else "no tail")
        flags.append("primitive" if is_primitive(walk) else "repetition")
    print(f"  {walk}: " + ", ".join(flags))
