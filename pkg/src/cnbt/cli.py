"""Command-line surface: generate, cluster, verify, experiment, spectra."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bp import CirculantPattern, circulant_spectrum
from .clustering import METHODS, run_method
from .experiment import ExperimentConfig, run_experiment, write_csv
from .graph import DirectedGraph
from .graph_io import read_edge_list, read_labels, write_edge_list, write_labels
from .matrices import cnbt_matrix, hermitian_adjacency, reduced_matrix
from .metrics import ari
from .sbm import DenseDsbmParams, SparseSbmParams, dense_dsbm_sample, sparse_sbm_sample
from .spectral import eigendecompose, verify_edge_to_node, verify_ihara
from .walks import count_walk_tables, r_k_via_recurrence


def _random_digraph(rng: np.random.Generator, n: int, p: float) -> DirectedGraph:
    edges = [(u, v) for u in range(n) for v in range(n)
             if u != v and rng.random() < p]
    return DirectedGraph(n, edges)


def _cmd_generate(args) -> int:
    if args.model == "dense-dsbm":
        params = DenseDsbmParams(k=args.K, n=args.n, p=args.p, eta=args.eta)
        graph, labels = dense_dsbm_sample(params, args.seed)
    else:
        params = SparseSbmParams(k=args.K, n=args.n, c=args.c,
                                 epsilon=args.epsilon, eta=args.eta,
                                 pareto_exponent=args.pareto_exponent)
        kind = "dcsbm" if args.model == "dcsbm" else "dsbm"
        graph, labels, _theta, diag = sparse_sbm_sample(params, kind, args.seed)
        if diag.clip_fraction > 0.01:
            print(f"warning: clipped {diag.clip_fraction:.2%} of pair probabilities",
                  file=sys.stderr)
    write_edge_list(graph, args.out_edges)
    if args.out_labels:
        write_labels(labels, args.out_labels)
    print(f"wrote {len(graph.edges)} edges on {graph.n} vertices to {args.out_edges}")
    return 0


def _cmd_cluster(args) -> int:
    graph = read_edge_list(args.edges)
    run = run_method(graph, args.K, args.method, seed=args.seed)
    if args.out:
        write_labels(run.labels, args.out)
    if args.labels:
        truth = read_labels(args.labels)
        print(f"ari={ari(run.labels, truth)!r}")
    else:
        print(" ".join(str(int(x)) for x in run.labels))
    return 0


def _cmd_spectra(args) -> int:
    graph = read_edge_list(args.edges)
    alpha = np.exp(2j * np.pi / args.K)
    if args.matrix == "cnbt":
        matrix = cnbt_matrix(graph, alpha).matrix
    elif args.matrix == "herm":
        matrix = hermitian_adjacency(graph, alpha).matrix
    else:
        matrix = reduced_matrix(graph, alpha).matrix
    top = min(args.top, matrix.shape[0])
    pairs = eigendecompose(matrix, top)
    for value in pairs.values:
        print(f"{float(value.real)!r},{float(value.imag)!r}")
    return 0


def _verify_ihara_suite(seed: int, trials: int) -> tuple[int, int]:
    rng = np.random.default_rng(seed)
    failures = 0
    for trial in range(trials):
        n = int(rng.integers(3, 13))
        p = rng.choice([0.1, 0.3, 0.5])
        graph = _random_digraph(rng, n, p)
        alpha = rng.choice([1j, np.exp(2j * np.pi / 3), np.exp(2j * np.pi / 5)])
        u = 0.5 * rng.random(20) * np.exp(2j * np.pi * rng.random(20))
        u = u[np.abs(1 - u * u) > 1e-6]
        if verify_ihara(graph, alpha, u) > 1e-8:
            failures += 1
    return trials - failures, failures

def _verify_walks_suite(seed: int, trials: int) -> tuple[int, int]:
    rng = np.random.default_rng(seed)
    failures = 0
    for trial in range(trials):
        n = int(rng.integers(3, 8))
        graph = _random_digraph(rng, n, 0.3)
        alpha = np.exp(2j * np.pi / 4)
        tables = count_walk_tables(graph, 4, 4)
        herm = hermitian_adjacency(graph, alpha)
        from .graph import NeighborhoodProfile
        degree = NeighborhoodProfile(graph).degree
        r_seq = r_k_via_recurrence(herm, degree, 4)
        powers = alpha ** np.arange(4)
        ok = all(
            np.max(np.abs(r_seq[k - 1] - sum(powers[r] * tables.P[k, r] for r in range(4)))) <= 1e-9
            for k in range(1, 5)
        )
        failures += 0 if ok else 1
    return trials - failures, failures


def _verify_transfer_suite(seed: int, trials: int) -> tuple[int, int]:
    rng = np.random.default_rng(seed)
    failures = 0
    for trial in range(trials):
        n = int(rng.integers(3, 13))
        graph = _random_digraph(rng, n, 0.3)
        m = len(graph.underlying_pairs())
        alpha = np.exp(2j * np.pi / 5)
        g_vec = rng.standard_normal(2 * m) + 1j * rng.standard_normal(2 * m)
        residual = verify_edge_to_node(graph, alpha, g_vec)
        if residual > 1e-10 * (1 + np.linalg.norm(g_vec)):
            failures += 1
    return trials - failures, failures


def _sorted_eigs(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.complex128).reshape(-1)
    order = np.lexsort((np.round(values.imag, 9), np.round(values.real, 9)))
    return values[order]


def _verify_circulant_suite(seed: int, trials: int) -> tuple[int, int]:
    rng = np.random.default_rng(seed)
    failures = 0
    for trial in range(trials):
        k = int(rng.integers(3, 9))
        e = min(0.5 + 0.5 * rng.random(), 0.999)
        g_val = rng.random() + 0.01
        f_val = g_val + rng.random() + 0.01
        for pattern in (CirculantPattern("bias", k, (e,)),
                        CirculantPattern("two-level", k, (f_val, g_val))):
            closed = _sorted_eigs(circulant_spectrum(pattern))
            numeric = _sorted_eigs(np.linalg.eigvals(pattern.matrix()))
            if np.max(np.abs(closed - numeric)) > 1e-10:
                failures += 1
    return trials - failures, failures


_SUITES = {
    "ihara": _verify_ihara_suite,
    "walks": _verify_walks_suite,
    "transfer": _verify_transfer_suite,
    "circulant": _verify_circulant_suite,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    exit_code = 0
    for name in names:
        passed, failed = _SUITES[name](args.seed, args.trials)
        status = "PASS" if failed == 0 else "FAIL"
        print(f"{name}: {status} ({passed}/{passed + failed} trials)")
        if failed:
            exit_code = 1
    return exit_code


def _cmd_experiment(args) -> int:
    cfg = ExperimentConfig.from_json(args.config)
    rows = run_experiment(cfg, workers=args.workers)
    output = args.output or cfg.output
    if output:
        write_csv(rows, output)
        print(f"wrote {len(rows)} rows to {output}")
    else:
        for row in rows:
            print(",".join(row.as_csv_row()))
    errored = sum(1 for row in rows if "error=" in row.flags)
    if errored:
        print(f"{errored} trials errored", file=sys.stderr)
        if not args.keep_going:
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnbt",
        description="Complex non-backtracking matrices and directed-graph clustering",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="sample a benchmark graph")
    p_gen.add_argument("--model", required=True, choices=["dense-dsbm", "sparse-dsbm", "dcsbm"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--K", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=0.01)
    p_gen.add_argument("--eta", type=float, default=0.1)
    p_gen.add_argument("--c", type=float, default=5.0)
    p_gen.add_argument("--epsilon", type=float, default=4.0)
    p_gen.add_argument("--pareto-exponent", type=float, default=2.5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out-edges", required=True)
    p_gen.add_argument("--out-labels")
    p_gen.set_defaults(func=_cmd_generate)

    p_clu = sub.add_parser("cluster", help="cluster an edge-list file")
    p_clu.add_argument("--edges", required=True)
    p_clu.add_argument("--K", type=int, required=True)
    p_clu.add_argument("--method", default="cnbt-out", choices=list(METHODS))
    p_clu.add_argument("--seed", type=int, default=0)
    p_clu.add_argument("--labels", help="ground-truth labels; prints ARI when given")
    p_clu.add_argument("--out", help="write predicted labels here")
    p_clu.set_defaults(func=_cmd_cluster)

    p_ver = sub.add_parser("verify", help="run randomized identity suites")
    p_ver.add_argument("--suite", default="all", choices=["all", *_SUITES])
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=20)
    p_ver.set_defaults(func=_cmd_verify)

    p_exp = sub.add_parser("experiment", help="run a config-driven sweep")
    p_exp.add_argument("--config", required=True)
    p_exp.add_argument("--output")
    p_exp.add_argument("--workers", type=int, default=1)
    p_exp.add_argument("--keep-going", action="store_true",
                       help="exit 0 even when trials errored")
    p_exp.set_defaults(func=_cmd_experiment)

    p_spe = sub.add_parser("spectra", help="dump leading eigenvalues of a matrix")
    p_spe.add_argument("--edges", required=True)
    p_spe.add_argument("--K", type=int, required=True, help="alpha = exp(2 pi i / K)")
    p_spe.add_argument("--matrix", default="cnbt", choices=["cnbt", "herm", "reduced"])
    p_spe.add_argument("--top", type=int, default=10)
    p_spe.set_defaults(func=_cmd_spectra)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
