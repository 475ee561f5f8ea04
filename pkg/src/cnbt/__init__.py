"""Complex non-backtracking matrices and spectral clustering for digraphs."""

__version__ = "0.1.0"

from .graph import (
    DirectedGraph,
    NeighborhoodProfile,
    OrientedEdgeIndex,
    PairKind,
    build_graph,
    index_oriented_edges,
    neighborhoods,
)
from .matrices import (
    CnbtMatrix,
    HermitianAdjacency,
    ReducedMatrix,
    cnbt_matrix,
    hermitian_adjacency,
    nbt_matrix,
    reduced_matrix,
    unit_root_order,
)
from .walks import (
    WalkCountTables,
    count_walk_tables,
    has_tail,
    is_nbt,
    is_primitive,
    r_k_via_recurrence,
    rotation,
    zeta_log_series,
)
from .spectral import (
    EigenPairs,
    NodeVectors,
    eigendecompose,
    eigpair_transfer,
    log_det_series,
    node_vectors,
    verify_edge_to_node,
    verify_ihara,
)
from .clustering import (
    ClusteringRun,
    KMeansResult,
    METHODS,
    baseline_cluster,
    cnbt_sc,
    kmeans,
    run_method,
)
from .sbm import (
    DenseDsbmParams,
    SparseSbmParams,
    circular_orientation_matrix,
    circular_rate_matrix,
    dense_dsbm_sample,
    gamma_from,
    sparse_sbm_sample,
)
from .bp import (
    BpModel,
    CirculantPattern,
    PerturbationState,
    bp_update,
    circulant_spectrum,
    linearized_step,
    uniform_messages,
)
from .metrics import ari
from .graph_io import read_edge_list, read_labels, write_edge_list, write_labels
from .experiment import ExperimentConfig, ResultRow, run_experiment, write_csv
