import json
import subprocess
import sys

import numpy as np
import pytest

from hetnorm.cli import main, parse_int_list
from hetnorm.generators import erdos_renyi, quasi_complete, star
from hetnorm.io import load_edge_list, read_csv, write_edge_list


@pytest.fixture
def star4(tmp_path):
    p = tmp_path / "star4.edges"
    write_edge_list(star(4), p)
    return p


def _usage_error(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    return exc.value.code


def test_parse_int_list():
    assert parse_int_list("1..3,10") == [1, 2, 3, 10]
    assert len(parse_int_list("1..99")) == 99


class TestMetric:
    def test_star(self, star4, capsys):
        assert main(["metric", str(star4)]) == 0
        out = capsys.readouterr().out
        line = next(l for l in out.splitlines() if l.startswith("v_bar"))
        assert line.split()[1] == "0.5"

    def test_isolated_nodes_row(self, tmp_path, capsys):
        p = tmp_path / "qc.edges"
        write_edge_list(quasi_complete(6, 3), p)
        assert main(["metric", str(p)]) == 0
        rho = next(l for l in capsys.readouterr().out.splitlines() if l.startswith("rho"))
        assert "undefined: isolated nodes" in rho

    def test_csv_and_mapping(self, tmp_path, capsys):
        p = tmp_path / "named.edges"
        p.write_text("hub a\nhub b\nhub c\nhub hub\n")
        out, mapping = tmp_path / "r.csv", tmp_path / "m.csv"
        assert main(["metric", str(p), "--csv", str(out), "--mapping", str(mapping), "--metrics", "v_bar,rho"]) == 0
        assert "self-loop" in capsys.readouterr().err
        rows = read_csv(out)
        assert [r["metric"] for r in rows] == ["v_bar", "rho"] and rows[0]["value"] == "0.5"
        assert read_csv(mapping)[0] == {"node": "0", "label": "hub"}

    def test_weighted(self, tmp_path, capsys):
        p = tmp_path / "w.csv"
        w = np.ones((4, 4)) - np.eye(4)
        np.savetxt(p, w, delimiter=",")
        assert main(["metric", str(p), "--weighted", "--density", "0.5"]) == 0
        assert "n=4 m=3" in capsys.readouterr().out

    def test_missing_file(self, capsys):
        assert main(["metric", "/nonexistent/file.edges"]) == 1
        assert "error" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        p = tmp_path / "bad.edges"
        p.write_text("0 1\n2\n")
        assert main(["metric", str(p)]) == 1
        assert ":2:" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "extra", [["--weighted"], ["--density", "0.5"], ["--metrics", "bogus"]]
    )
    def test_usage_errors(self, star4, extra):
        assert _usage_error(["metric", str(star4)] + extra) == 2


class TestGenerate:
    def test_perfect_quasi_star(self, tmp_path):
        p = tmp_path / "qs.edges"
        assert main(["generate", "quasi-star", "--n", "6", "--m", "9", "--out", str(p)]) == 0
        assert sorted(load_edge_list(p).degrees.tolist()) == [2, 2, 2, 2, 5, 5]

    def test_p_flag(self, tmp_path):
        p = tmp_path / "qs.edges"
        assert main(["generate", "qs", "--n", "6", "--p", "2", "--out", str(p)]) == 0
        assert load_edge_list(p).m == 9

    def test_er_reproducible(self, tmp_path):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        for p in (a, b):
            assert main(["generate", "er", "--n", "100", "--q", "0.2", "--seed", "7", "--out", str(p)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert load_edge_list(a) == erdos_renyi(100, 0.2, seed=7)

    def test_stdout(self, capsys):
        assert main(["generate", "star", "--n", "3"]) == 0
        assert capsys.readouterr().out.splitlines()[-2:] == ["0 1", "0 2"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["generate", "cycle", "--n", "2"],
            ["generate", "er", "--n", "10", "--q", "0.5"],
            ["generate", "nope", "--n", "5"],
            ["generate", "qs", "--n", "5", "--m", "3", "--p", "1"],
            ["generate", "qs", "--n", "5", "--m", "30"],
        ],
    )
    def test_usage_errors(self, argv):
        assert _usage_error(argv) == 2


class TestExperiments:
    @pytest.mark.parametrize(
        "argv",
        [
            ["sweep", "--sizes", "8"],
            ["subsample", "--corpus", "."],
            ["bench", "--sizes", "1000"],
            ["bench", "--sizes", "100000", "--seed", "1"],
            ["bench", "--sizes", "100", "--seed", "1"],
            ["sweep", "--seed", "1", "--percents", "0..5"],
            ["sweep", "--seed", "1", "--threads", "0"],
            ["subsample", "--corpus", ".", "--seed", "1", "--percents", "100"],
            ["corpus"],
        ],
    )
    def test_usage_errors(self, argv, tmp_path):
        assert _usage_error(argv + ["--out", str(tmp_path / "o")]) == 2

    def test_sweep_outputs(self, tmp_path, capsys):
        out = tmp_path / "sw"
        argv = ["sweep", "--families", "qs,er", "--sizes", "10,14", "--percents", "10..12", "--replicates", "2"]
        assert main(argv + ["--seed", "3", "--out", str(out)]) == 0
        assert {p.name for p in out.iterdir()} == {"sweep.csv", "cov_size.csv", "cov_density.csv", "summary.json"}
        summary = json.loads((out / "summary.json").read_text())
        assert summary["master_seed"] == 3 and "created" in summary
        assert "created" not in (out / "sweep.csv").read_text()
        assert len(read_csv(out / "sweep.csv")) == 2 * 2 * 3 * 4

    def test_sweep_with_matrix(self, tmp_path, capsys):
        m = tmp_path / "w.csv"
        w = np.random.default_rng(0).random((12, 12))
        np.savetxt(m, np.triu(w, 1) + np.triu(w, 1).T, delimiter=",")
        out = tmp_path / "sw"
        argv = ["sweep", "--families", "qs", "--sizes", "8", "--percents", "20,40", "--matrix", str(m)]
        assert main(argv + ["--seed", "1", "--out", str(out)]) == 0
        assert {r["family"] for r in read_csv(out / "sweep.csv")} == {"quasi_star", "matrix"}

    def test_subsample_records_failures(self, tmp_path, capsys):
        corpus = tmp_path / "c"
        corpus.mkdir()
        for i in range(3):
            write_edge_list(erdos_renyi(20, 0.3, seed=i), corpus / f"g{i}.edges")
        (corpus / "bad.edges").write_text("oops\n")
        out = tmp_path / "o"
        assert main(["subsample", "--corpus", str(corpus), "--iterations", "2", "--seed", "1", "--out", str(out)]) == 0
        summary = json.loads((out / "summary.json").read_text())
        assert [f["id"] for f in summary["failures"]] == ["bad"]
        assert "skipped bad" in capsys.readouterr().err

    def test_corpus_missing_directory(self, tmp_path, capsys):
        assert main(["corpus", "--corpus", str(tmp_path / "none"), "--out", str(tmp_path / "o")]) == 1


def test_module_entry_point(star4):
    proc = subprocess.run([sys.executable, "-m", "hetnorm", "metric", str(star4)], capture_output=True, text=True)
    assert proc.returncode == 0 and "v_bar" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "hetnorm", "generate", "cycle", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
