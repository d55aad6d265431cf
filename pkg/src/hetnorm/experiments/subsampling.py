"""Node and edge subsampling, and the robustness suite built on them."""

import math
import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .._rng import as_fraction, derive_seed, make_rng, round_half_up
from ..exceptions import UndefinedMetricError
from ..metrics import estrada_heterogeneity, normalised_degree_variance
from ..stats import median_and_iqr
from ._common import pmap

__all__ = [
    "REMOVAL_MODES",
    "SamplerFallbackWarning",
    "RobustnessRecord",
    "subsample_nodes",
    "subsample_edges_uniform",
    "subsample_edges_inverse_degree",
    "inverse_degree_weights",
    "inverse_degree_removal",
    "robustness_suite",
    "robustness_table",
]

REMOVAL_MODES = ("nodes_uniform", "edges_uniform", "edges_inverse_degree")
DEFAULT_PERCENTS = (5, 10, 15, 20, 25)


class SamplerFallbackWarning(RuntimeWarning):
    """Every remaining edge had zero removal weight; uniform removal was used."""


def _check_percent(percent):
    p = as_fraction(percent)
    if not 0 < p < 100:
        raise ValueError("percent must lie strictly between 0 and 100")
    return p


def subsample_nodes(g, percent, seed):
    """Induced subgraph on ``ceil((1 - percent/100) n)`` uniformly chosen nodes.

    Kept nodes are relabelled ``0..n'-1`` in increasing original order.
    """
    p = _check_percent(percent)
    keep = math.ceil((100 - p) * g.n / 100)
    if keep < 2:
        raise ValueError(f"removing {percent}% of {g.n} nodes leaves fewer than two")
    rng = make_rng(seed)
    nodes = np.sort(rng.choice(g.n, size=keep, replace=False))
    return g.induced_subgraph(nodes)


def _removal_count(g, percent):
    p = _check_percent(percent)
    if g.m == 0:
        raise ValueError("graph has no edges to remove")
    return round_half_up(p * g.m / 100)


def subsample_edges_uniform(g, percent, seed):
    """Remove ``round(percent/100 * m)`` edges chosen uniformly without replacement."""
    k = _removal_count(g, percent)
    rng = make_rng(seed)
    return g.remove_edges(rng.choice(g.m, size=k, replace=False))


def inverse_degree_weights(g):
    """``h_ij = ((n-1) - k_i)((n-1) - k_j)`` for every edge, in :attr:`Graph.edges` order."""
    k = g.degrees
    e = g.edges
    top = g.n - 1
    return (top - k[e[:, 0]]) * (top - k[e[:, 1]])


def inverse_degree_removal(g, count, rng):
    """Edge indices removed by the degree-weighted sampler, in removal order.

    Each removal picks a remaining edge with probability ``h_ij / T`` (``T``
    the total weight of remaining edges) by inverse-transform sampling on the
    normalised cumulative weight vector. Weights come from the original
    degrees. Draws that land on an already-removed edge are discarded, which
    is the same as renormalising over the remaining edges.

    Returns
    -------
    order : ndarray of int
    fell_back : bool
        True when positive-weight edges ran out and the rest were removed
        uniformly among zero-weight edges.
    """
    h = inverse_degree_weights(g)
    positive = np.flatnonzero(h > 0)
    k_pos = min(count, positive.size)
    removed = np.zeros(g.m, dtype=bool)
    order = []
    active = positive
    while len(order) < k_pos:
        active = active[~removed[active]]
        cum = np.cumsum(h[active], dtype=np.float64)
        total = cum[-1]
        cum /= total
        live_mass = total
        need = k_pos - len(order)
        # rebuild the table once half of its mass has been removed
        while need > 0 and live_mass > total / 2:
            u = rng.random(max(2 * need, 16))
            picks = active[np.minimum(np.searchsorted(cum, u, side="right"), active.size - 1)]
            _, first = np.unique(picks, return_index=True)
            for e in picks[np.sort(first)]:
                if removed[e]:
                    continue
                removed[e] = True
                order.append(int(e))
                live_mass -= h[e]
                need -= 1
                if need == 0 or live_mass <= total / 2:
                    break
    fell_back = count > k_pos
    if fell_back:
        rest = np.flatnonzero(~removed & (h == 0))
        extra = rng.choice(rest, size=count - k_pos, replace=False)
        order.extend(int(e) for e in extra)
    return np.array(order, dtype=np.int64), fell_back


def subsample_edges_inverse_degree(g, percent, seed):
    """Remove ``round(percent/100 * m)`` edges, favouring edges between low-degree nodes.

    See :func:`inverse_degree_removal` for the sampling procedure. Issues a
    :class:`SamplerFallbackWarning` if it had to fall back to uniform removal.
    """
    k = _removal_count(g, percent)
    order, fell_back = inverse_degree_removal(g, k, make_rng(seed))
    if fell_back:
        warnings.warn("all remaining edges had zero removal weight; removed uniformly", SamplerFallbackWarning, stacklevel=2)
    return g.remove_edges(order)


@dataclass(frozen=True)
class RobustnessRecord:
    """Mean of one metric over subsamples of one network.

    ``n_valid`` counts iterations where the metric was defined; for rho the
    iterations producing isolated nodes are skipped (``n_skipped``).
    """

    network_id: str
    removal_mode: str
    percent_removed: float
    metric_name: str
    baseline_value: float | None
    subsample_mean: float | None
    n_valid_iterations: int
    n_skipped: int
    abs_difference: float | None
    n_fallback: int = 0
    reason: str | None = None

    def as_row(self):
        return asdict(self)


ROBUSTNESS_COLUMNS = tuple(RobustnessRecord.__dataclass_fields__)
ALL_SKIPPED = "undefined in every iteration"

_SUBSAMPLERS = {
    "nodes_uniform": subsample_nodes,
    "edges_uniform": subsample_edges_uniform,
    "edges_inverse_degree": None,
}
_METRICS = {"v_bar": normalised_degree_variance, "rho": estrada_heterogeneity}


def _safe(fn, g):
    try:
        return fn(g), None
    except UndefinedMetricError as exc:
        return None, exc.reason


def _robustness_unit(net_id, g, mode, percent, iterations, seed):
    rng = make_rng(derive_seed(seed, "robustness", net_id, mode, str(percent)))
    values = {name: [] for name in _METRICS}
    skip_reasons = {name: set() for name in _METRICS}
    fallbacks = 0
    failure = None
    for _ in range(iterations):
        try:
            if mode == "edges_inverse_degree":
                order, fell_back = inverse_degree_removal(g, _removal_count(g, percent), rng)
                fallbacks += fell_back
                sub = g.remove_edges(order)
            else:
                sub = _SUBSAMPLERS[mode](g, percent, rng)
        except ValueError as exc:
            failure = str(exc)
            break
        for name, fn in _METRICS.items():
            v, why = _safe(fn, sub)
            if v is None:
                skip_reasons[name].add(why)
            else:
                values[name].append(v)
    records = []
    for name, fn in _METRICS.items():
        base, base_why = _safe(fn, g)
        vals = values[name]
        mean = float(np.mean(vals)) if vals and failure is None else None
        reason = failure or (f"baseline undefined: {base_why}" if base is None else None)
        if reason is None and mean is None:
            reason = ALL_SKIPPED + ": " + "; ".join(sorted(skip_reasons[name]))
        diff = abs(base - mean) if base is not None and mean is not None else None
        n_valid = len(vals) if failure is None else 0
        records.append(
            RobustnessRecord(
                network_id=net_id,
                removal_mode=mode,
                percent_removed=percent,
                metric_name=name,
                baseline_value=base,
                subsample_mean=mean,
                n_valid_iterations=n_valid,
                n_skipped=iterations - n_valid,
                abs_difference=diff,
                n_fallback=fallbacks,
                reason=reason,
            )
        )
    return records


def _with_ids(corpus):
    out = []
    for idx, item in enumerate(corpus):
        if isinstance(item, tuple):
            out.append((str(item[0]), item[1]))
        else:
            out.append((f"net{idx:04d}", item))
    return out


def robustness_suite(corpus, percents=DEFAULT_PERCENTS, iterations=50, seed=None, modes=REMOVAL_MODES, threads=1):
    """Subsample every network and compare v_bar and rho with their baselines.

    Parameters
    ----------
    corpus : list of Graph or list of (id, Graph)
    percents : iterable of numbers
        Percentages of nodes or edges removed.
    iterations : int
        Subsamples per (network, mode, percent).
    seed : int
        Master seed; each (network, mode, percent) derives its own stream.

    Returns
    -------
    list of RobustnessRecord
        Networks with fewer than five nodes or edges, and subsampling
        failures, are recorded with a ``reason`` rather than aborting.
    """
    if seed is None:
        raise ValueError("robustness_suite needs an explicit seed")
    for mode in modes:
        if mode not in REMOVAL_MODES:
            raise ValueError(f"unknown removal mode {mode!r}")
    nets = _with_ids(corpus)
    units = [(nid, g, mode, pct) for nid, g in nets for mode in modes for pct in percents]

    def run(unit):
        nid, g, mode, pct = unit
        if g.n < 5 or g.m < 5:
            return [
                RobustnessRecord(nid, mode, pct, name, None, None, 0, iterations, None, 0, "network has fewer than 5 nodes or edges")
                for name in _METRICS
            ]
        return _robustness_unit(nid, g, mode, pct, iterations, seed)

    return [rec for recs in pmap(run, units, threads) for rec in recs]


TABLE_COLUMNS = ("removal_mode", "metric_name", "percent_removed", "median_abs_difference", "q1", "q3", "n_networks", "mean_skip_rate")


def robustness_table(records):
    """Median absolute difference across networks per mode, metric and percent.

    ``mean_skip_rate`` is the average over networks of the fraction of
    iterations where the metric was undefined.
    """
    groups = {}
    for r in records:
        groups.setdefault((r.removal_mode, r.metric_name, r.percent_removed), []).append(r)
    rows = []
    for (mode, metric, pct), recs in groups.items():
        diffs = [r.abs_difference for r in recs if r.abs_difference is not None]
        # skip rates only make sense where subsampling ran and the baseline exists
        usable = [
            r
            for r in recs
            if r.baseline_value is not None and (r.reason is None or r.reason.startswith(ALL_SKIPPED))
        ]
        skip = [r.n_skipped / (r.n_valid_iterations + r.n_skipped) for r in usable]
        row = {
            "removal_mode": mode,
            "metric_name": metric,
            "percent_removed": pct,
            "n_networks": len(diffs),
            "mean_skip_rate": float(np.mean(skip)) if skip else None,
        }
        if diffs:
            med, q1, q3 = median_and_iqr(diffs)
            row.update(median_abs_difference=med, q1=q1, q3=q3)
        else:
            row.update(median_abs_difference=None, q1=None, q3=None)
        rows.append(row)
    return rows
