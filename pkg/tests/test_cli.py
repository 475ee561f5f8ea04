import csv
import json

import pytest

from cnbt import read_edge_list, read_labels
from cnbt.cli import main


def test_generate_cluster_round_trip(tmp_path, capsys):
    edges = tmp_path / "graph.tsv"
    labels = tmp_path / "labels.txt"
    code = main([
        "generate", "--model", "sparse-dsbm", "--n", "120", "--K", "3",
        "--c", "8", "--epsilon", "6", "--eta", "1.0",
        "--seed", "0", "--out-edges", str(edges), "--out-labels", str(labels),
    ])
    assert code == 0
    graph = read_edge_list(edges)
    assert graph.n == 120
    assert len(read_labels(labels)) == 120

    predicted = tmp_path / "predicted.txt"
    code = main([
        "cluster", "--edges", str(edges), "--K", "3", "--method", "cnbt-out",
        "--seed", "0", "--labels", str(labels), "--out", str(predicted),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "ari=" in out
    assert len(read_labels(predicted)) == 120


def test_verify_suites_pass(capsys):
    code = main(["verify", "--suite", "all", "--seed", "1", "--trials", "4"])
    assert code == 0
    out = capsys.readouterr().out
    for name in ("ihara", "walks", "transfer", "circulant"):
        assert f"{name}: PASS" in out


def test_spectra_outputs_requested_count(tmp_path, capsys):
    edges = tmp_path / "graph.tsv"
    edges.write_text("# n=4\n0\t1\n1\t0\n0\t2\n1\t2\n2\t3\n3\t1\n")
    code = main(["spectra", "--edges", str(edges), "--K", "4",
                 "--matrix", "cnbt", "--top", "5"])
    assert code == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l]
    assert len(lines) == 5
    for line in lines:
        real, imag = line.split(",")
        float(real), float(imag)


def test_experiment_cli_writes_csv_and_reports_errors(tmp_path, capsys):
    config = {
        "model": "sparse-dsbm", "n": 60, "K": 3,
        "params": {"c": 6.0, "epsilon": 4.0},
        "sweep": {"eta": [1.0]},
        "methods": ["cnbt-out"], "seeds": 1,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    out_path = tmp_path / "rows.csv"
    code = main(["experiment", "--config", str(cfg_path), "--output", str(out_path)])
    assert code == 0
    rows = list(csv.DictReader(open(out_path)))
    assert len(rows) == 1 and rows[0]["method"] == "cnbt-out"

    # A failing config (n not divisible by K) exits nonzero unless told to
    # keep going.
    config["n"] = 61
    cfg_path.write_text(json.dumps(config))
    assert main(["experiment", "--config", str(cfg_path),
                 "--output", str(out_path)]) == 1
    assert main(["experiment", "--config", str(cfg_path),
                 "--output", str(out_path), "--keep-going"]) == 0
    rows = list(csv.DictReader(open(out_path)))
    assert "error=" in rows[0]["flags"]


def test_cli_rejects_unknown_method(tmp_path):
    edges = tmp_path / "graph.tsv"
    edges.write_text("0\t1\n")
    with pytest.raises(SystemExit):
        main(["cluster", "--edges", str(edges), "--K", "2", "--method", "nope"])
