"""Randomized graph corpora shared by the property and acceptance tests."""

import math

import numpy as np

from hetnorm import Graph
from hetnorm.generators import quasi_complete, quasi_star

KINDS = ("er", "chung_lu", "quasi_star", "quasi_complete")


def _pairs(n):
    return np.triu_indices(n, k=1)


def _er(n, rng):
    i, j = _pairs(n)
    d = rng.random()
    keep = rng.random(i.size) < d
    return Graph(n, np.column_stack([i[keep], j[keep]]))


def _chung_lu(n, rng):
    # heavy-tailed expected degrees, rescaled to a random target density
    w = rng.pareto(1.5, n) + 1.0
    i, j = _pairs(n)
    p = w[i] * w[j]
    p = np.minimum(1.0, p * (rng.random() * i.size / p.sum()))
    keep = rng.random(i.size) < p
    return Graph(n, np.column_stack([i[keep], j[keep]]))


def _extremal(build, n, rng):
    return build(n, int(rng.integers(0, n * (n - 1) // 2 + 1)))


def random_graph(rng, n_min=2, n_max=500, kind=None):
    """One graph with log-uniform ``n`` in ``[n_min, n_max]`` and a random density."""
    n = int(round(math.exp(rng.uniform(math.log(n_min), math.log(n_max)))))
    kind = kind or KINDS[int(rng.integers(len(KINDS)))]
    if kind == "er":
        return _er(n, rng)
    if kind == "chung_lu":
        return _chung_lu(n, rng)
    if kind == "quasi_star":
        return _extremal(quasi_star, n, rng)
    return _extremal(quasi_complete, n, rng)


def random_corpus(count, seed, **kwargs):
    rng = np.random.default_rng(seed)
    return [random_graph(rng, **kwargs) for _ in range(count)]


def conditioned_graph(rng, n, x, a):
    """Random graph with at least ``x`` nodes of degree exactly ``a``.

    ``a`` must be ``n - 1`` (dominant nodes) or at most ``n - x``.
    """
    nodes = rng.permutation(n)
    special, rest = nodes[:x], nodes[x:]
    edges = set()
    if a == n - 1:
        for s in special:
            edges.update((min(s, t), max(s, t)) for t in range(n) if t != s)
    else:
        for s in special:
            for t in rng.choice(rest, size=a, replace=False):
                edges.add((min(s, t), max(s, t)))
    d = rng.random()
    for ii in range(rest.size):
        for jj in range(ii + 1, rest.size):
            if rng.random() < d:
                u, v = rest[ii], rest[jj]
                edges.add((min(u, v), max(u, v)))
    return Graph(n, np.array(sorted(edges), dtype=np.int64).reshape(-1, 2))
