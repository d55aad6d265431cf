"""Graph families used throughout the experiments.

Deterministic families (quasi-star, quasi-complete and the canonical
fixtures) are pure functions of their integer parameters. Random families
take a ``seed`` that is an int, a :class:`numpy.random.SeedSequence` or a
:class:`numpy.random.Generator`; the same seed always yields the same graph.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._rng import make_rng
from .graph import Graph
from .weighted import WeightedGraph, threshold_to_density

__all__ = [
    "GeneratorSpec",
    "FAMILIES",
    "generate",
    "quasi_star",
    "quasi_star_perfect",
    "quasi_complete",
    "erdos_renyi",
    "random_uniform_weighted",
    "random_geometric_weighted",
    "scale_free",
    "star",
    "complete",
    "cycle",
    "empty",
]


def _max_edges(n):
    return n * (n - 1) // 2


def _check_m(n, m):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= m <= _max_edges(n):
        raise ValueError(f"m={m} outside [0, {_max_edges(n)}] for n={n}")


def quasi_star(n, m):
    """Quasi-star graph with ``n`` nodes and exactly ``m`` edges.

    Nodes ``0..p-1`` are dominant (joined to every other node), where ``p``
    is the largest count whose edges ``p(2n-p-1)/2`` fit in ``m``. The
    remaining ``r`` edges join the developing node ``p`` to nodes
    ``p+1..p+r``. With ``r == 1`` this is a single edge between two
    non-dominant nodes, both ending with degree ``p + 1``.
    """
    n, m = int(n), int(m)
    _check_m(n, m)
    p = 0
    while p < n - 1 and (p + 1) * (2 * n - p - 2) // 2 <= m:
        p += 1
    r = m - p * (2 * n - p - 1) // 2
    parts = []
    for hub in range(p):
        others = np.arange(hub + 1, n, dtype=np.int64)
        parts.append(np.column_stack([np.full(others.size, hub, dtype=np.int64), others]))
    if r:
        leaves = np.arange(p + 1, p + 1 + r, dtype=np.int64)
        parts.append(np.column_stack([np.full(r, p, dtype=np.int64), leaves]))
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return Graph(n, edges)


def quasi_star_perfect(n, p):
    """Perfect quasi-star: ``p`` dominant nodes and no remainder."""
    n, p = int(n), int(p)
    if not 0 <= p <= max(n - 1, 0):
        raise ValueError(f"p={p} outside [0, n-1] for n={n}")
    return quasi_star(n, p * (2 * n - p - 1) // 2)


def quasi_complete(n, m):
    """Quasi-complete graph with ``n`` nodes and exactly ``m`` edges.

    A clique on nodes ``0..q-1`` with ``q`` the largest order such that
    ``q(q-1)/2 <= m``; node ``q`` is then joined to the first ``p`` clique
    members to absorb the remainder. All other nodes are isolated.
    """
    n, m = int(n), int(m)
    _check_m(n, m)
    q = 0
    while q < n and (q + 1) * q // 2 <= m:
        q += 1
    p = m - q * (q - 1) // 2
    iu, ju = np.triu_indices(q, k=1)
    edges = np.column_stack([iu, ju]).astype(np.int64)
    if p:
        extra = np.column_stack([np.arange(p, dtype=np.int64), np.full(p, q, dtype=np.int64)])
        edges = np.concatenate([edges, extra])
    return Graph(n, edges)


def star(n):
    if n < 1:
        raise ValueError("star requires n >= 1")
    leaves = np.arange(1, n, dtype=np.int64)
    return Graph(n, np.column_stack([np.zeros_like(leaves), leaves]))


def complete(n):
    if n < 1:
        raise ValueError("complete graph requires n >= 1")
    iu, ju = np.triu_indices(n, k=1)
    return Graph(n, np.column_stack([iu, ju]))


def cycle(n):
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    a = np.arange(n, dtype=np.int64)
    return Graph(n, np.column_stack([a, (a + 1) % n]))


def empty(n):
    if n < 1:
        raise ValueError("empty graph requires n >= 1")
    return Graph(n)


def erdos_renyi(n, q, seed):
    """G(n, q): every pair present independently with probability ``q``."""
    if not 0.0 <= q <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = make_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < q
    return Graph(n, np.column_stack([iu[keep], ju[keep]]))


def random_uniform_weighted(n, seed):
    """Complete weighted graph with i.i.d. U(0, 1) weights.

    Proportional thresholding of this model gives a uniformly random graph
    with exactly the requested edge count (the weighted Erdos-Renyi model).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = make_rng(seed)
    w = np.zeros((n, n))
    iu = np.triu_indices(n, k=1)
    w[iu] = rng.random(iu[0].size)
    return WeightedGraph(w + w.T)


def random_geometric_weighted(n, seed):
    """Weighted random geometric graph on the unit square.

    Nodes are placed uniformly at random; ``w_ij = 1 - dist(i, j) / sqrt(2)``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = make_rng(seed)
    pts = rng.random((n, 2))
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=-1))
    w = 1.0 - dist / math.sqrt(2.0)
    np.fill_diagonal(w, 0.0)
    np.clip(w, 0.0, 1.0, out=w)
    return WeightedGraph(w)


def scale_free_parameters(n):
    """``(core_size, attachments_per_node)`` for a ~1% density scale-free graph."""
    return math.ceil(0.01 * n), math.ceil(0.005 * n)


def scale_free(n, seed):
    """Preferential-attachment graph at roughly 1% density.

    A clique on ``ceil(0.01 n)`` nodes seeds the process; each later node
    attaches ``ceil(0.005 n)`` edges to distinct earlier nodes, chosen with
    probability proportional to their current degree.
    """
    n = int(n)
    if n < 200:
        raise ValueError("scale_free requires n >= 200")
    rng = make_rng(seed)
    core, k = scale_free_parameters(n)
    m_total = core * (core - 1) // 2 + (n - core) * k
    edges = np.empty((m_total, 2), dtype=np.int64)
    iu, ju = np.triu_indices(core, k=1)
    n_core_edges = iu.size
    edges[:n_core_edges, 0] = iu
    edges[:n_core_edges, 1] = ju
    # every edge contributes both endpoints; uniform draws from this pool are
    # degree-proportional draws over nodes
    pool = edges.reshape(-1)
    filled = n_core_edges
    for t in range(core, n):
        size = 2 * filled
        draws = pool[rng.integers(0, size, size=2 * k)]
        while True:
            _, first = np.unique(draws, return_index=True)
            if first.size >= k:
                break
            draws = np.concatenate([draws, pool[rng.integers(0, size, size=k)]])
        # first k distinct values of the i.i.d. sequence, in draw order
        chosen = draws[np.sort(first)[:k]]
        edges[filled : filled + k, 0] = chosen
        edges[filled : filled + k, 1] = t
        filled += k
    return Graph(n, edges)


FAMILIES = (
    "quasi_star",
    "quasi_complete",
    "erdos_renyi",
    "random_geometric_weighted",
    "scale_free",
    "star",
    "complete",
    "cycle",
    "empty",
)

_RANDOM = {"erdos_renyi", "random_geometric_weighted", "scale_free"}


@dataclass(frozen=True)
class GeneratorSpec:
    """A validated request for one graph.

    ``params`` holds the family-specific values: ``n`` always, ``m`` for the
    quasi families, ``q`` for Erdos-Renyi and ``density`` for the weighted
    geometric family (which is thresholded to a binary graph).
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        required = {"n"}
        if self.family in ("quasi_star", "quasi_complete"):
            required |= {"m"}
        elif self.family == "erdos_renyi":
            required |= {"q"}
        elif self.family == "random_geometric_weighted":
            required |= {"density"}
        missing = required - set(self.params)
        if missing:
            raise ValueError(f"{self.family} needs parameter(s): {', '.join(sorted(missing))}")
        if self.family in _RANDOM and self.seed is None:
            raise ValueError(f"{self.family} needs an explicit seed")
        if self.seed is not None and not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def is_random(self):
        return self.family in _RANDOM


def generate(spec):
    """Build the graph described by a :class:`GeneratorSpec`."""
    p = spec.params
    n = int(p["n"])
    f = spec.family
    if f == "quasi_star":
        return quasi_star(n, int(p["m"]))
    if f == "quasi_complete":
        return quasi_complete(n, int(p["m"]))
    if f == "erdos_renyi":
        return erdos_renyi(n, float(p["q"]), spec.seed)
    if f == "random_geometric_weighted":
        return threshold_to_density(random_geometric_weighted(n, spec.seed), p["density"])
    if f == "scale_free":
        return scale_free(n, spec.seed)
    return {"star": star, "complete": complete, "cycle": cycle, "empty": empty}[f](n)
