"""Hand-checked reference data for a small 4-vertex digraph.

The graph has vertices 0..3 and directed edges
(0,1), (1,0), (0,2), (1,2), (2,3), (3,1):
0 and 1 are a bidirected pair, everything else is one-way.  All matrices
below were worked out by hand at weight alpha = i (rotation modulus 4).

The reference matrices use their own oriented-edge order, kept here as
REF_EDGE_ORDER; PERM_TO_CANONICAL maps a reference position to the index
the package's canonical (lexicographic) order assigns the same oriented
edge, so REF_B[i, j] == B[PERM[i], PERM[j]].
"""
import numpy as np

N = 4
EDGES = [(0, 1), (1, 0), (0, 2), (1, 2), (2, 3), (3, 1)]

A = 1j
AC = -1j

# Hermitian adjacency at alpha = i: 1 bidirected, i forward, -i backward.
REF_A = np.array([
    [0, 1, A, 0],
    [1, 0, A, AC],
    [AC, AC, 0, A],
    [0, A, AC, 0],
], dtype=np.complex128)

# Oriented-edge order used by the reference B matrix (pairing: entry 5+i
# reverses entry i).
REF_EDGE_ORDER = [
    (0, 1), (0, 2), (1, 2), (2, 3), (3, 1),
    (1, 0), (2, 0), (2, 1), (3, 2), (1, 3),
]

REF_B = np.array([
    [0, 0, A, 0, 0, 0, 0, 0, 0, AC],
    [0, 0, 0, A, 0, 0, 0, AC, 0, 0],
    [0, 0, 0, A, 0, 0, AC, 0, 0, 0],
    [0, 0, 0, 0, A, 0, 0, 0, 0, 0],
    [0, 0, A, 0, 0, 1, 0, 0, 0, 0],
    [0, A, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, AC],
    [0, 0, 0, 0, 0, 0, AC, AC, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, AC, 0],
], dtype=np.complex128)

# Canonical order here: (0,1),(0,2),(1,2),(1,3),(2,3) then the reverses.
PERM_TO_CANONICAL = [0, 1, 2, 4, 8, 5, 6, 7, 9, 3]

# Nine walks / cycles: vertices, length, rotation (mod 4), is_nbt,
# has_tail (None for non-cycles), is_primitive (None for non-cycles).
WALK_ROWS = [
    ((1, 0), 1, 0, True, None, None),
    ((1, 2), 1, 1, True, None, None),
    ((3, 2), 1, 3, True, None, None),
    ((0, 1, 2, 3), 3, 2, True, None, None),
    ((0, 1, 2, 1), 3, 0, False, None, None),
    ((0, 1, 2, 0), 3, 0, True, False, True),
    ((0, 1, 0, 1, 0), 4, 0, False, False, False),
    ((0, 1, 2, 3, 1, 0), 5, 3, True, True, True),
    ((1, 3, 2, 1, 3, 2, 1), 6, 2, True, False, False),
]

# Vertex degrees (neighbor counts) and the bottom-left diagonal of the
# reduced block matrix, d - 1.
DEGREES = np.array([2, 3, 3, 2])
