import json

import pytest

from hetnorm import Graph, GraphFormatError
from hetnorm.generators import empty, erdos_renyi, quasi_complete
from hetnorm.io import (
    format_value,
    load_edge_list,
    read_csv,
    read_edge_list,
    scan_corpus,
    write_csv,
    write_edge_list,
    write_json,
)


def _write(tmp_path, text, name="g.edges"):
    p = tmp_path / name
    p.write_text(text)
    return p


class TestReadEdgeList:
    def test_path(self, tmp_path):
        g = load_edge_list(_write(tmp_path, "0 1\n1 2"))
        assert g.degrees.tolist() == [1, 2, 1]

    def test_duplicates_counted(self, tmp_path):
        f = read_edge_list(_write(tmp_path, "0 1\n1 0\n"))
        assert f.graph.m == 1 and f.n_duplicates == 1

    def test_self_loop_counted(self, tmp_path):
        f = read_edge_list(_write(tmp_path, "0 1\n2 2\n"))
        assert f.graph.m == 1 and f.n_self_loops == 1 and f.graph.n == 3

    def test_labels_remapped_in_first_appearance_order(self, tmp_path):
        f = read_edge_list(_write(tmp_path, "% konect\nbob alice\nalice carol,0.5\n"))
        assert f.labels == ["bob", "alice", "carol"]
        assert f.graph.edge_set() == {(0, 1), (1, 2)}

    def test_node_count_header(self, tmp_path):
        g = load_edge_list(_write(tmp_path, "# n=5\n0 1\n"))
        assert g.n == 5 and g.has_isolated_nodes()

    def test_header_smaller_than_labels(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path, "# n=2\n0 1\n1 2\n"))

    def test_single_token_reports_line(self, tmp_path):
        with pytest.raises(GraphFormatError, match=r":3:"):
            load_edge_list(_write(tmp_path, "0 1\n# c\n7\n"))

    def test_empty_file(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path, "# nothing\n"))

    def test_index_labels_must_be_integers(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path, "# labels=index\na b\n"))


class TestWriteEdgeList:
    @pytest.mark.parametrize("g", [quasi_complete(9, 11), erdos_renyi(30, 0.2, seed=3), empty(4), Graph(3, [(2, 1)])])
    def test_round_trip(self, tmp_path, g):
        p = tmp_path / "out.edges"
        write_edge_list(g, p, comments=["family=test"])
        assert load_edge_list(p) == g
        first = p.read_bytes()
        write_edge_list(load_edge_list(p), p, comments=["family=test"])
        assert p.read_bytes() == first


def test_scan_corpus(tmp_path):
    for i in range(3):
        write_edge_list(quasi_complete(6, 4 + i), tmp_path / f"g{i}.edges")
    _write(tmp_path, "0 1\nbroken\n", "z_bad.edges")
    graphs, failures = scan_corpus(tmp_path)
    assert [name for name, _ in graphs] == ["g0", "g1", "g2"]
    assert [name for name, _ in failures] == ["z_bad"]


def test_scan_corpus_errors(tmp_path):
    with pytest.raises(ValueError):
        scan_corpus(tmp_path)
    with pytest.raises(NotADirectoryError):
        scan_corpus(tmp_path / "missing")


class TestCsvJson:
    def test_format_value(self):
        assert format_value(None) == ""
        assert format_value(1 / 3) == "0.333333333333"
        assert format_value(3) == "3"
        assert format_value(True) == "true"
        with pytest.raises(ValueError):
            format_value(float("nan"))

    def test_header_only(self, tmp_path):
        p = tmp_path / "x.csv"
        write_csv([], p, ("a", "b"))
        assert p.read_text() == "a,b\n"

    def test_round_trip(self, tmp_path):
        p = tmp_path / "x.csv"
        write_csv([{"a": 1, "b": None}, {"a": 0.5, "b": "why"}], p, ("a", "b"))
        assert read_csv(p) == [{"a": "1", "b": ""}, {"a": "0.5", "b": "why"}]

    def test_json_sorted_and_sanitised(self, tmp_path):
        p = tmp_path / "x.json"
        write_json({"b": float("inf"), "a": [1, 2]}, p)
        text = p.read_text()
        assert json.loads(text) == {"a": [1, 2], "b": None}
        assert text.index('"a"') < text.index('"b"')
