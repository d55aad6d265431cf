"""Immutable simple undirected graphs and degree bookkeeping.

A :class:`Graph` stores its edges as a canonical ``(m, 2)`` integer array
(``i < j``, rows sorted lexicographically) together with the cached degree
vector. Every heterogeneity index in this package is a function of the
degree vector, the edge count and (for the edge-sum indices) the edge array,
so nothing here builds an adjacency structure unless asked to.
"""

import numpy as np

from .exceptions import UndefinedMetricError

__all__ = [
    "Graph",
    "degree_sequence",
    "density",
    "complement",
    "sum_squared_degrees",
]


def _readonly(a):
    a.setflags(write=False)
    return a


class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of nodes.
    edges : array-like of shape (m, 2), optional
        Unordered node pairs. Orientation and row order do not matter.

    Raises
    ------
    ValueError
        On out-of-range endpoints, self-loops or duplicate edges.
    """

    __slots__ = ("_n", "_edges", "_degrees", "_keys")

    def __init__(self, n, edges=()):
        n = int(n)
        if n < 0:
            raise ValueError("node count must be nonnegative")
        e = np.asarray(edges, dtype=np.int64)
        if e.size == 0:
            e = np.empty((0, 2), dtype=np.int64)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must have shape (m, 2)")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError(f"edge endpoint out of range for n={n}")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        if np.any(lo == hi):
            raise ValueError("self-loops are not allowed in a simple graph")
        keys = lo * n + hi
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if keys.size > 1 and np.any(keys[1:] == keys[:-1]):
            raise ValueError("duplicate edges are not allowed in a simple graph")
        canon = np.empty((keys.size, 2), dtype=np.int64)
        canon[:, 0] = lo[order]
        canon[:, 1] = hi[order]
        self._n = n
        self._keys = _readonly(keys)
        self._edges = _readonly(canon)
        self._degrees = _readonly(np.bincount(canon.ravel(), minlength=n).astype(np.int64))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return int(self._keys.size)

    @property
    def edges(self):
        """Canonical read-only ``(m, 2)`` edge array."""
        return self._edges

    @property
    def degrees(self):
        """Read-only degree vector (cached at construction)."""
        return self._degrees

    def has_edge(self, i, j):
        if i == j:
            return False
        lo, hi = (i, j) if i < j else (j, i)
        if lo < 0 or hi >= self._n:
            return False
        key = lo * self._n + hi
        pos = np.searchsorted(self._keys, key)
        return bool(pos < self._keys.size and self._keys[pos] == key)

    def edge_set(self):
        return {(int(i), int(j)) for i, j in self._edges}

    def is_regular(self):
        return self._n == 0 or bool(np.all(self._degrees == self._degrees[0]))

    def has_isolated_nodes(self):
        return bool(np.any(self._degrees == 0))

    # -- derived graphs --------------------------------------------------

    def complement(self):
        n = self._n
        iu, ju = np.triu_indices(n, k=1)
        present = np.zeros(iu.size, dtype=bool)
        if self.m:
            # position of (i, j), i < j, in row-major upper-triangle order
            i, j = self._edges[:, 0], self._edges[:, 1]
            pos = i * n - i * (i + 1) // 2 + (j - i - 1)
            present[pos] = True
        keep = ~present
        return Graph(n, np.column_stack([iu[keep], ju[keep]]))

    def induced_subgraph(self, nodes):
        """Subgraph induced by ``nodes``, relabelled to ``0..len(nodes)-1``
        following the given order."""
        nodes = np.asarray(nodes, dtype=np.int64)
        if nodes.size != np.unique(nodes).size:
            raise ValueError("nodes must be distinct")
        new_id = np.full(self._n, -1, dtype=np.int64)
        new_id[nodes] = np.arange(nodes.size)
        a = new_id[self._edges[:, 0]]
        b = new_id[self._edges[:, 1]]
        keep = (a >= 0) & (b >= 0)
        return Graph(nodes.size, np.column_stack([a[keep], b[keep]]))

    def remove_edges(self, indices):
        """New graph without the edges at the given rows of :attr:`edges`."""
        mask = np.ones(self.m, dtype=bool)
        mask[np.asarray(indices, dtype=np.int64)] = False
        return Graph(self._n, self._edges[mask])

    def relabel(self, perm):
        """New graph with node ``i`` renamed to ``perm[i]``."""
        perm = np.asarray(perm, dtype=np.int64)
        if perm.shape != (self._n,) or not np.array_equal(np.sort(perm), np.arange(self._n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph(self._n, perm[self._edges])

    def to_adjacency(self):
        a = np.zeros((self._n, self._n), dtype=np.int8)
        a[self._edges[:, 0], self._edges[:, 1]] = 1
        a[self._edges[:, 1], self._edges[:, 0]] = 1
        return a

    @classmethod
    def from_adjacency(cls, adj):
        adj = np.asarray(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if np.any(np.diag(adj) != 0):
            raise ValueError("adjacency matrix has self-loops")
        if not np.array_equal(adj != 0, (adj != 0).T):
            raise ValueError("adjacency matrix must be symmetric")
        i, j = np.nonzero(np.triu(adj != 0, k=1))
        return cls(adj.shape[0], np.column_stack([i, j]))

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._keys, other._keys)

    def __hash__(self):
        return hash((self._n, self._keys.tobytes()))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def degree_sequence(g):
    """Degree vector ``k`` of ``g`` (length ``n``, sums to ``2m``)."""
    return g.degrees


def density(g):
    """Edge density ``2m / (n (n - 1))``.

    Raises
    ------
    UndefinedMetricError
        If ``n < 2``.
    """
    if g.n < 2:
        raise UndefinedMetricError("n < 2", "density is undefined for fewer than two nodes")
    return 2.0 * g.m / (g.n * (g.n - 1))


def complement(g):
    return g.complement()


def sum_squared_degrees(g):
    """Exact ``sum(k_i ** 2)`` as a Python int."""
    k = g.degrees
    # int64 holds this for n up to ~2e6; beyond that fall back to Python ints
    if g.n <= 2_000_000:
        return int(np.dot(k, k))
    return sum(int(x) * int(x) for x in k)
