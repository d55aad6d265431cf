"""Weighted networks and proportional (top-e) thresholding."""

import csv
import warnings

import numpy as np

from ._rng import as_fraction, make_rng, round_half_up
from .exceptions import GraphFormatError
from .graph import Graph

__all__ = [
    "WeightedGraph",
    "threshold_to_density",
    "density_sweep",
    "load_weighted_matrix",
    "subsample_nodes",
]

ASYMMETRY_TOLERANCE = 1e-9


class WeightedGraph:
    """Symmetric nonnegative weight matrix with zero diagonal.

    The matrix is copied and frozen; use :func:`load_weighted_matrix` for
    files that need symmetrising.
    """

    __slots__ = ("_w",)

    def __init__(self, w):
        w = np.array(w, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        if np.any(np.diag(w) != 0):
            raise ValueError("weight matrix must have a zero diagonal")
        if not np.array_equal(w, w.T):
            raise ValueError("weight matrix must be symmetric")
        w.setflags(write=False)
        self._w = w

    @property
    def n(self):
        return self._w.shape[0]

    @property
    def weights(self):
        return self._w

    def pair_order(self):
        """Upper-triangle pairs ``(i, j)`` sorted strongest first.

        Ties keep lexicographic ``(i, j)`` order, so cut-offs are reproducible.
        """
        iu, ju = np.triu_indices(self.n, k=1)
        order = np.argsort(-self._w[iu, ju], kind="stable")
        return iu[order], ju[order]

    def __repr__(self):
        return f"WeightedGraph(n={self.n})"


def _edge_count(n, d):
    d = as_fraction(d)
    if not 0 <= d <= 1:
        raise ValueError("density must lie in [0, 1]")
    return round_half_up(d * (n * (n - 1) // 2))


def threshold_to_density(wg, d):
    """Keep the ``round(d * n(n-1)/2)`` strongest pairs as edges.

    ``d`` may be a float or a :class:`fractions.Fraction`; rounding is
    half-up on the exact decimal value.
    """
    e = _edge_count(wg.n, d)
    iu, ju = wg.pair_order()
    return Graph(wg.n, np.column_stack([iu[:e], ju[:e]]))


def density_sweep(wg, percents):
    """One thresholded graph per integer percentage.

    Returns a list of ``(density, Graph)`` with ``density`` the requested
    fraction ``percent / 100``. Thresholds are nested because every graph is
    a prefix of the same ordering.
    """
    iu, ju = wg.pair_order()
    out = []
    for pct in percents:
        pct = int(pct)
        if not 0 <= pct <= 100:
            raise ValueError(f"percent {pct} outside [0, 100]")
        e = _edge_count(wg.n, as_fraction(pct) / 100)
        out.append((pct / 100, Graph(wg.n, np.column_stack([iu[:e], ju[:e]]))))
    return out


def subsample_nodes(wg, n_sub, seed):
    """Induced weighted subgraph on ``n_sub`` nodes drawn uniformly without replacement."""
    if not 2 <= n_sub <= wg.n:
        raise ValueError(f"n_sub must lie in [2, {wg.n}]")
    rng = make_rng(seed)
    nodes = np.sort(rng.choice(wg.n, size=n_sub, replace=False))
    return WeightedGraph(wg.weights[np.ix_(nodes, nodes)])


def _is_number(token):
    try:
        float(token)
    except ValueError:
        return False
    return True


def load_weighted_matrix(path):
    """Read a square weight matrix from a comma-separated file.

    One row per line. A first line containing any non-numeric cell is taken
    as a header and skipped. The matrix is symmetrised as ``(w + w.T) / 2``
    (with a warning when the asymmetry exceeds 1e-9) and its diagonal zeroed.

    Raises
    ------
    GraphFormatError
        For non-numeric cells, ragged or non-square input and negative weights.
    """
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, raw in enumerate(csv.reader(fh), start=1):
            cells = [c.strip() for c in raw]
            if not cells or all(c == "" for c in cells):
                continue
            if lineno == 1 and not all(_is_number(c) for c in cells):
                continue
            try:
                rows.append((lineno, [float(c) for c in cells]))
            except ValueError:
                raise GraphFormatError("non-numeric cell", path, lineno) from None
    if not rows:
        raise GraphFormatError("no matrix rows found", path)
    width = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != width:
            raise GraphFormatError(f"ragged row: expected {width} cells, got {len(row)}", path, lineno)
    w = np.array([r for _, r in rows])
    if w.shape[0] != w.shape[1]:
        raise GraphFormatError(f"matrix is not square: {w.shape[0]}x{w.shape[1]}", path)
    if not np.all(np.isfinite(w)):
        raise GraphFormatError("matrix contains non-finite values", path)
    if np.any(w < 0):
        raise GraphFormatError("matrix contains negative weights", path)
    asym = float(np.max(np.abs(w - w.T))) if w.size else 0.0
    if asym > ASYMMETRY_TOLERANCE:
        warnings.warn(f"{path}: asymmetric weights (max |w - w.T| = {asym:.3g}); symmetrised", stacklevel=2)
    w = (w + w.T) / 2.0
    np.fill_diagonal(w, 0.0)
    return WeightedGraph(w)
