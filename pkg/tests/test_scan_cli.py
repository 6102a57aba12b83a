"""Scan rows, CSV schema, tree enumeration, and the CLI surface."""

import json
import subprocess
import sys

from lssrings.cli import main as cli_main
from lssrings.graphs import encode_graph6, gapped, max_degree, parse_graph6
from lssrings.scan import (CSV_HEADER, CSV_SCHEMA_VERSION, check_forest_pmd,
                           enumerate_trees, pruefer_decode, rows_to_csv,
                           scan_corpus, scan_graph)


def run_cli(*args, capsys=None):
    return cli_main(list(args))


def test_csv_schema_version_pinned():
    assert CSV_SCHEMA_VERSION == 1
    assert len(CSV_HEADER) == 14


def test_csv_schema_and_single_edge_row():
    rows, summary = scan_corpus(["A_"], stable_ms=True)
    csv_text = rows_to_csv(rows)
    lines = csv_text.strip().split("\n")
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "A_,2,1,1,1,1,1,1,exact,0,1,1,1,0"
    assert summary.violations == 0 and summary.total == 1


def test_csv_golden_block():
    """Frozen rows for a tiny corpus; pmd values cross-checked against the
    brute-force oracle when the block was recorded."""
    corpus = ["@", "A_", "Bg", "Cl", "C~"]     # K1, K2, P3, C4, K4
    rows, _ = scan_corpus(corpus, stable_ms=True)
    golden = "\n".join([
        ",".join(CSV_HEADER),
        "@,1,0,1,0,0,-1,0,exact,,1,1,1,0",
        "A_,2,1,1,1,1,1,1,exact,0,1,1,1,0",
        "Bg,3,2,1,2,1,2,2,exact,0,1,1,1,0",
        "Cl,4,4,1,2,2,3,3,exact,0,1,1,1,0",
        "C~,4,6,0,3,3,5,5,exact,0,1,,1,0",
    ]) + "\n"
    assert rows_to_csv(rows) == golden


def test_gapped_family_row():
    g = gapped(4)
    row = scan_graph(g, "gapped4", stable_ms=True)
    assert (row.delta, row.k, row.alpha, row.pmd) == (5, 3, 7, 5)
    assert row.gap == 2 and row.ok_conjecture


def test_scan_handles_malformed_lines():
    rows, summary = scan_corpus(["A_", "not graph6 at all!", "C~"], stable_ms=True)
    assert summary.total == 3 and summary.parse_errors == 1
    assert rows[1].status.startswith("parse_error")
    assert rows[0].status == "exact" and rows[2].status == "exact"


def test_scan_serial_deterministic():
    lines = ["A_", "C~", "Bw"]
    a = rows_to_csv(scan_corpus(lines, stable_ms=True)[0])
    b = rows_to_csv(scan_corpus(lines, stable_ms=True)[0])
    assert a == b


def test_parallel_scan_matches_serial_as_multiset():
    lines = [encode_graph6(g) for g in enumerate_trees(5)][:20]
    serial, _ = scan_corpus(lines, stable_ms=True)
    parallel, _ = scan_corpus(lines, jobs=2, stable_ms=True)
    key = lambda r: (r.id, r.pmd, r.status, r.gap)
    assert sorted(map(key, serial)) == sorted(map(key, parallel))


def test_budget_exhausted_rows_not_counted_as_violations():
    from lssrings.graphs import complete
    k6 = encode_graph6(complete(6))
    rows, summary = scan_corpus([k6], node_budget=2, stable_ms=True)
    assert rows[0].status == "upper_bound_only"
    assert rows[0].ok_conjecture is None
    assert summary.violations == 0 and summary.budget_exhausted == 1


def test_budget_env_override(monkeypatch):
    from lssrings.graphs import complete
    monkeypatch.setenv("LSS_BUDGET_NODES", "2")
    row = scan_graph(complete(6), "K6", stable_ms=True)
    assert row.status == "upper_bound_only"


def test_tree_counts():
    assert sum(1 for _ in enumerate_trees(2)) == 1
    assert sum(1 for _ in enumerate_trees(3)) == 3
    assert sum(1 for _ in enumerate_trees(4)) == 16
    g = pruefer_decode(4, (2, 2))
    assert g.n == 4 and g.m == 3 and max_degree(g) == 3


def test_check_forest_pmd_small():
    summary = check_forest_pmd(5)
    assert summary["ok"] and summary["checked"] == 1 + 1 + 3 + 16 + 125


def test_cli_invariants_json(capsys):
    assert cli_main(["invariants", "example", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["delta"], data["k"], data["alpha"]) == (3, 2, 4)


def test_cli_pmd_certificate(capsys):
    assert cli_main(["pmd", "example", "--certificate"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 3 and data["status"] == "exact"
    assert len(data["certificates"]) == 3


def test_cli_thresholds(capsys):
    assert cli_main(["thresholds", "star:3", "--d", "5"]) == 0
    out = capsys.readouterr().out
    assert "ufd" in out and "guaranteed" in out


def test_cli_verify_star_path_d_example(capsys):
    for target in ("star", "D", "example"):
        assert cli_main(["verify", target]) == 0, target
        capsys.readouterr()
    assert cli_main(["verify", "path", "--n", "4"]) == 0


def test_cli_scan_stable_and_finding_free(tmp_path, capsys):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("# comment line\nA_\nC~\n", encoding="utf-8")
    out = tmp_path / "rows.csv"
    assert cli_main(["scan", str(corpus), "--stable", "--csv", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert len(text.splitlines()) == 3


def test_cli_error_exit_codes(tmp_path, capsys):
    assert cli_main(["invariants", "definitely-not-a-graph!!"]) == 1
    assert cli_main(["scan", str(tmp_path / "missing.g6")]) == 1
    assert cli_main(["verify", "path", "--n", "9"]) == 2   # desk-scale guard


def test_cli_trees_roundtrip(capsys):
    assert cli_main(["trees", "--n", "3"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 3
    for line in out:
        g = parse_graph6(line)
        assert g.n == 3 and g.m == 2


def test_cli_trees_check(capsys):
    assert cli_main(["trees", "--n", "4", "--check"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_entrypoint_subprocess():
    proc = subprocess.run([sys.executable, "-m", "lssrings.cli", "pmd", "example"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "pmd = 3" in proc.stdout


def test_cli_scan_json_document(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("A_\n", encoding="utf-8")
    assert cli_main(["scan", str(corpus), "--json", "--stable"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["total"] == 1
    assert doc["rows"][0]["pmd"] == 1 and doc["rows"][0]["gap"] == 0
