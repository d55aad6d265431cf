"""Density sweeps over graph families and the coefficient-of-variation tables."""

from dataclasses import dataclass, field

import numpy as np

from .._rng import as_fraction, derive_seed, make_rng, round_half_up
from ..exceptions import UndefinedMetricError
from ..generators import quasi_complete, quasi_star, random_geometric_weighted, random_uniform_weighted
from ..metrics import (
    average_degree_normalisation,
    degree_variance,
    estrada_heterogeneity,
    normalised_degree_variance,
    quasi_star_normalisation,
)
from ..stats import coefficient_of_variation
from ..weighted import density_sweep, subsample_nodes
from ._common import pmap

__all__ = [
    "SWEEP_METRICS",
    "FAMILY_ALIASES",
    "SweepTable",
    "CovSummary",
    "stability_sweep",
    "replicate_seed",
    "cov_vs_size",
    "cov_vs_density",
]

SWEEP_METRICS = ("v_bar", "j", "sigma2", "rho")

FAMILY_ALIASES = {
    "qs": "quasi_star",
    "quasi_star": "quasi_star",
    "qc": "quasi_complete",
    "quasi_complete": "quasi_complete",
    "er": "erdos_renyi",
    "erdos_renyi": "erdos_renyi",
    "rgg": "random_geometric",
    "random_geometric": "random_geometric",
    "matrix": "matrix",
}
DETERMINISTIC = ("quasi_star", "quasi_complete")

SWEEP_COLUMNS = ("family", "n", "density_percent", "metric", "value", "reason", "n_defined", "replicates")


@dataclass
class SweepTable:
    """Metric values indexed by ``(family, n, density_percent, metric)``.

    Random families hold the mean over ``replicates`` draws. A cell is
    undefined (``value is None``) when the metric was undefined in any
    replicate; ``reason`` says why and ``n_defined`` how many were fine.
    """

    rows: list
    replicates: int
    master_seed: int | None
    columns: tuple = SWEEP_COLUMNS
    _index: dict = field(default=None, repr=False)

    def cell(self, family, n, percent, metric):
        if self._index is None:
            self._index = {(r["family"], r["n"], r["density_percent"], r["metric"]): r for r in self.rows}
        return self._index[(family, n, percent, metric)]

    def value(self, family, n, percent, metric):
        return self.cell(family, n, percent, metric)["value"]

    @property
    def families(self):
        return list(dict.fromkeys(r["family"] for r in self.rows))

    def sizes(self, family):
        return sorted({r["n"] for r in self.rows if r["family"] == family})

    def percents(self, family):
        return sorted({r["density_percent"] for r in self.rows if r["family"] == family})

    def metrics(self):
        return list(dict.fromkeys(r["metric"] for r in self.rows))


def replicate_seed(master_seed, family, n, replicate):
    """Seed for one replicate of a random family; independent of scheduling."""
    return derive_seed(master_seed, "sweep", family, n, replicate)


def _evaluate(g, qs_variance):
    out = {}
    for name, fn in (
        ("v_bar", normalised_degree_variance),
        ("sigma2", average_degree_normalisation),
        ("rho", estrada_heterogeneity),
    ):
        try:
            out[name] = (fn(g), None)
        except UndefinedMetricError as exc:
            out[name] = (None, exc.reason)
    try:
        out["j"] = (quasi_star_normalisation(g, reference_variance=qs_variance(g.n, g.m)), None)
    except UndefinedMetricError as exc:
        out["j"] = (None, exc.reason)
    return out


def _qs_variance_cache():
    cache = {}

    def qs_variance(n, m):
        key = (n, m)
        if key not in cache:
            cache[key] = degree_variance(quasi_star(n, m))
        return cache[key]

    return qs_variance


def _edge_count(n, pct):
    return round_half_up(as_fraction(pct) / 100 * (n * (n - 1) // 2))


def _deterministic_unit(family, n, percents):
    build = quasi_star if family == "quasi_star" else quasi_complete
    qs_variance = _qs_variance_cache()
    return [(pct, _evaluate(build(n, _edge_count(n, pct)), qs_variance)) for pct in percents]


def _random_unit(family, n, percents, seed, matrices):
    if family == "erdos_renyi":
        wg = random_uniform_weighted(n, seed)
    elif family == "random_geometric":
        wg = random_geometric_weighted(n, seed)
    else:
        rng = make_rng(seed)
        source = matrices[int(rng.integers(len(matrices)))]
        wg = subsample_nodes(source, n, rng)
    qs_variance = _qs_variance_cache()
    return [(pct, _evaluate(g, qs_variance)) for pct, (_, g) in zip(percents, density_sweep(wg, percents))]


def stability_sweep(families, sizes, percents, replicates, seed, matrices=None, threads=1):
    """Evaluate v_bar, J, sigma^2 and rho across families, sizes and densities.

    Parameters
    ----------
    families : iterable of str
        Any of ``qs``, ``qc``, ``er``, ``rgg``, ``matrix`` (long names work too).
        ``er`` and ``rgg`` are weighted models thresholded at each density;
        ``matrix`` draws node subsets from the user-supplied ``matrices``.
    sizes : iterable of int
    percents : iterable of int
        Integer densities in ``[1, 99]``.
    replicates : int
        Draws per random family and size (deterministic families use one).
    seed : int
        Master seed.
    matrices : list of WeightedGraph, optional
        Required for the ``matrix`` family.
    threads : int
        Worker threads; results do not depend on it.
    """
    fams = []
    for f in families:
        if f not in FAMILY_ALIASES:
            raise ValueError(f"unknown sweep family {f!r}")
        fams.append(FAMILY_ALIASES[f])
    fams = list(dict.fromkeys(fams))
    sizes = [int(s) for s in sizes]
    percents = [int(p) for p in percents]
    if any(s < 2 for s in sizes):
        raise ValueError("sizes must be at least 2")
    if any(not 1 <= p <= 99 for p in percents):
        raise ValueError("percents must lie in [1, 99]")
    if replicates < 1:
        raise ValueError("replicates must be positive")
    if "matrix" in fams:
        if not matrices:
            raise ValueError("the matrix family needs at least one weighted matrix")
        too_small = [s for s in sizes if s > min(wg.n for wg in matrices)]
        if too_small:
            raise ValueError(f"sizes {too_small} exceed the smallest supplied matrix")

    units = []
    for fam in fams:
        for n in sizes:
            if fam in DETERMINISTIC:
                units.append((fam, n, None))
            else:
                units.extend((fam, n, r) for r in range(replicates))

    def run(unit):
        fam, n, r = unit
        if r is None:
            return _deterministic_unit(fam, n, percents)
        return _random_unit(fam, n, percents, replicate_seed(seed, fam, n, r), matrices)

    results = pmap(run, units, threads)

    grouped = {}
    for (fam, n, _), res in zip(units, results):
        grouped.setdefault((fam, n), []).append(res)

    rows = []
    for fam in fams:
        for n in sizes:
            reps = grouped[(fam, n)]
            for idx, pct in enumerate(percents):
                for metric in SWEEP_METRICS:
                    vals = [rep[idx][1][metric] for rep in reps]
                    rows.append(_aggregate(fam, n, pct, metric, vals))
    return SweepTable(rows=rows, replicates=replicates, master_seed=seed)


def _aggregate(fam, n, pct, metric, vals):
    defined = [v for v, _ in vals if v is not None]
    row = {
        "family": fam,
        "n": n,
        "density_percent": pct,
        "metric": metric,
        "n_defined": len(defined),
        "replicates": len(vals),
    }
    if len(defined) == len(vals):
        row["value"] = float(np.mean(defined))
        row["reason"] = None
    else:
        reasons = sorted({r for v, r in vals if v is None})
        row["value"] = None
        row["reason"] = "; ".join(reasons)
    return row


@dataclass(frozen=True)
class CovSummary:
    """Averaged coefficient of variation for one ``(family, metric)`` pair."""

    family: str
    metric: str
    cov: float | None
    n_groups: int
    n_excluded_cells: int
    n_excluded_groups: int
    reason: str | None = None


COV_COLUMNS = ("family", "metric", "cov", "n_groups", "n_excluded_cells", "n_excluded_groups", "reason")


def _cov_table(table, group_key, across_key):
    out = {}
    for fam in table.families:
        rows = [r for r in table.rows if r["family"] == fam]
        for metric in table.metrics():
            groups = {}
            for r in rows:
                if r["metric"] == metric:
                    groups.setdefault(r[group_key], []).append(r)
            covs = []
            excluded_cells = excluded_groups = 0
            for _, cells in sorted(groups.items()):
                vals = [c["value"] for c in sorted(cells, key=lambda c: c[across_key]) if c["value"] is not None]
                excluded_cells += len(cells) - len(vals)
                if len(vals) < 2:
                    excluded_groups += 1
                    continue
                try:
                    covs.append(coefficient_of_variation(vals))
                except UndefinedMetricError:
                    excluded_groups += 1
            if covs:
                cov, reason = float(np.mean(covs)), None
            else:
                cov, reason = None, "no group with two or more defined values and nonzero mean"
            out[(fam, metric)] = CovSummary(fam, metric, cov, len(covs), excluded_cells, excluded_groups, reason)
    return out


def cov_vs_size(table):
    """CoV across sizes at each density, averaged over densities."""
    return _cov_table(table, "density_percent", "n")


def cov_vs_density(table):
    """CoV across densities at each size, averaged over sizes."""
    return _cov_table(table, "n", "density_percent")
