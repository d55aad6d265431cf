"""Edge-list ingestion, corpus scanning and CSV/JSON output.

Edge-list format (version 1)
----------------------------
* one edge per line, two node labels separated by whitespace or a comma;
  further columns (e.g. weights) are ignored;
* lines starting with ``#`` or ``%`` are comments;
* a comment of the form ``# n=<k>`` fixes the node count, so that
  isolated nodes beyond the last label survive a round trip;
* labels are remapped to ``0..n-1`` in order of first appearance, unless a
  ``# labels=index`` comment declares them to be node indices already
  (files produced by :func:`write_edge_list` carry it);
* self-loops and repeated pairs are dropped and counted.

CSV output: UTF-8, a header row, floats written with 12 significant digits,
undefined values as an empty cell with the reason in a companion column.
"""

import csv
import json
import logging
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import GraphFormatError
from .graph import Graph

__all__ = [
    "EdgeListFile",
    "read_edge_list",
    "load_edge_list",
    "write_edge_list",
    "scan_corpus",
    "format_value",
    "write_csv",
    "read_csv",
    "write_json",
    "FORMAT_VERSION",
]

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
_N_HEADER = re.compile(r"^[#%]\s*n\s*=\s*(\d+)\s*$")
_INDEX_HEADER = re.compile(r"^[#%]\s*labels\s*=\s*index\s*$")
_SPLIT = re.compile(r"[,\s]+")


@dataclass
class EdgeListFile:
    """A parsed edge-list file and what was discarded while reading it."""

    path: str
    graph: Graph
    labels: list = field(default_factory=list)
    n_duplicates: int = 0
    n_self_loops: int = 0


def read_edge_list(path):
    """Parse an edge-list file into an :class:`EdgeListFile`.

    Raises
    ------
    GraphFormatError
        For a line with fewer than two labels, or a file with no edges and
        no ``n=`` header.
    """
    labels = {}
    pairs = []
    seen = set()
    n_header = None
    index_labels = False
    dup = loops = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s:
                continue
            if s[0] in "#%":
                match = _N_HEADER.match(s)
                if match:
                    n_header = int(match.group(1))
                elif _INDEX_HEADER.match(s):
                    index_labels = True
                continue
            tokens = [t for t in _SPLIT.split(s) if t]
            if len(tokens) < 2:
                raise GraphFormatError(f"expected two node labels, got {s!r}", path, lineno)
            a, b = tokens[0], tokens[1]
            if a == b:
                loops += 1
                labels.setdefault(a, len(labels))
                continue
            ia = labels.setdefault(a, len(labels))
            ib = labels.setdefault(b, len(labels))
            key = (ia, ib) if ia < ib else (ib, ia)
            if key in seen:
                dup += 1
                continue
            seen.add(key)
            pairs.append(key)
    if not pairs and n_header is None and not labels:
        raise GraphFormatError("file contains no edges", path)
    if index_labels:
        return _index_labelled(path, labels, pairs, n_header, dup, loops)
    n = len(labels)
    if n_header is not None:
        if n_header < n:
            raise GraphFormatError(f"header n={n_header} but {n} distinct labels found", path)
        n = n_header
    edges = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    names = [None] * len(labels)
    for label, idx in labels.items():
        names[idx] = label
    if dup or loops:
        logger.info("%s: dropped %d duplicate edge(s) and %d self-loop(s)", path, dup, loops)
    return EdgeListFile(str(path), Graph(n, edges), names, dup, loops)


def _index_labelled(path, labels, pairs, n_header, dup, loops):
    try:
        ids = {label: int(label) for label in labels}
    except ValueError:
        raise GraphFormatError("labels=index requires integer labels", path) from None
    n = n_header if n_header is not None else max(ids.values(), default=-1) + 1
    if any(not 0 <= v < n for v in ids.values()):
        raise GraphFormatError(f"node index outside [0, {n})", path)
    back = {idx: ids[label] for label, idx in labels.items()}
    edges = np.array([(back[a], back[b]) for a, b in pairs], dtype=np.int64).reshape(-1, 2)
    return EdgeListFile(str(path), Graph(n, edges), [str(i) for i in range(n)], dup, loops)


def load_edge_list(path):
    """Load a simple undirected :class:`Graph` from an edge-list file."""
    return read_edge_list(path).graph


def write_edge_list(g, path, comments=()):
    """Write ``g`` in canonical edge order with an ``n=`` header.

    The output reloads to an identical graph.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# hetnorm edge list v{FORMAT_VERSION}\n")
        for c in comments:
            fh.write(f"# {c}\n")
        fh.write(f"# n={g.n}\n")
        fh.write("# labels=index\n")
        for i, j in g.edges:
            fh.write(f"{i} {j}\n")


def scan_corpus(directory):
    """Load every edge-list file in ``directory`` in lexicographic order.

    Returns
    -------
    graphs : list of (str, Graph)
        File stem and graph for each file that parsed.
    failures : list of (str, str)
        File stem and error message for each file that did not.
    """
    d = Path(directory)
    if not d.is_dir():
        raise NotADirectoryError(str(d))
    files = sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))
    if not files:
        raise ValueError(f"{d}: no edge-list files found")
    graphs, failures = [], []
    for p in files:
        try:
            graphs.append((p.stem, load_edge_list(p)))
        except (GraphFormatError, ValueError, UnicodeDecodeError) as exc:
            failures.append((p.stem, str(exc)))
    return graphs, failures


def format_value(x):
    """Render one CSV cell; floats get 12 significant digits, None is empty."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        if not np.isfinite(x):
            raise ValueError("non-finite values must be written as undefined (None)")
        return f"{float(x):.12g}"
    return str(x)


def write_csv(records, path, columns):
    """Write dict-like ``records`` with the given column order.

    An empty record list produces a header-only file.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for rec in records:
            w.writerow([format_value(rec.get(c)) for c in columns])


def read_csv(path):
    """Read a CSV written by :func:`write_csv` back as a list of dicts of strings."""
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        obj = float(obj)
    if isinstance(obj, float) and not np.isfinite(obj):
        return None
    if isinstance(obj, os.PathLike):
        return os.fspath(obj)
    return obj


def write_json(summary, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_jsonable(summary), fh, indent=2, sort_keys=True)
        fh.write("\n")
