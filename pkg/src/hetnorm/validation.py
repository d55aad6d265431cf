"""Input coercion for the estimator layer.

Anything graph-like is turned into a :class:`~hetnorm.graph.Graph`:
``Graph`` instances pass through, square 0/1 arrays are read as adjacency
matrices, and objects exposing ``nodes()`` / ``edges()`` (networkx graphs)
are converted with nodes numbered in iteration order.
"""

import numpy as np

from .graph import Graph
from .weighted import WeightedGraph


def check_graph(obj):
    """Return ``obj`` as a :class:`Graph` or raise ``TypeError``/``ValueError``."""
    if isinstance(obj, Graph):
        return obj
    if hasattr(obj, "nodes") and hasattr(obj, "edges") and callable(obj.nodes):
        if obj.is_directed() if hasattr(obj, "is_directed") else False:
            raise ValueError("directed graphs are not supported")
        index = {v: i for i, v in enumerate(obj.nodes())}
        pairs = {tuple(sorted((index[u], index[v]))) for u, v in obj.edges() if u != v}
        return Graph(len(index), sorted(pairs))
    if isinstance(obj, np.ndarray) or isinstance(obj, (list, tuple)):
        a = np.asarray(obj)
        if a.ndim == 2 and a.shape[0] == a.shape[1]:
            if not np.all(np.isin(a, (0, 1))):
                raise ValueError("adjacency matrix entries must be 0 or 1")
            return Graph.from_adjacency(a)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def check_graphs(X):
    """Coerce a collection of graph-like objects into a list of Graphs.

    A 3-d array is treated as a stack of adjacency matrices; a single
    :class:`Graph` is rejected to avoid silently treating it as a batch.
    """
    if isinstance(X, Graph):
        raise TypeError("expected a collection of graphs, got a single Graph")
    if isinstance(X, np.ndarray) and X.ndim == 3:
        return [check_graph(a) for a in X]
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("no graphs supplied")
    return graphs


def check_weighted(obj):
    """Return ``obj`` as a :class:`WeightedGraph` (arrays are validated, not repaired)."""
    if isinstance(obj, WeightedGraph):
        return obj
    return WeightedGraph(np.asarray(obj, dtype=np.float64))


def check_density(d):
    d = float(d)
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {d}")
    return d
