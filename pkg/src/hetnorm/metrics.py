"""Degree-heterogeneity indices and their closed-form reference values.

All indices take a :class:`~hetnorm.graph.Graph`. Indices that are not
defined for a graph raise :class:`~hetnorm.exceptions.UndefinedMetricError`;
:func:`metric_report` collects every index for one graph and records the
reason instead of raising.

The two edge-sum indices (Albertson irregularity and the Estrada
heterogeneity index) sum over adjacent pairs, each unordered edge once.
This is the convention under which the heterogeneity index of a star
graph equals one.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import UndefinedMetricError
from .generators import quasi_star
from .graph import sum_squared_degrees

__all__ = [
    "METRIC_NAMES",
    "MetricReport",
    "degree_variance",
    "normalised_degree_variance",
    "quasi_star_normalisation",
    "average_degree_normalisation",
    "albertson_irregularity",
    "estrada_heterogeneity",
    "metric_report",
    "vbar_perfect_quasi_star",
    "vbar_star_closed_form",
    "vbar_random_expectation",
    "vbar_lower_bound",
    "vbar_lower_bound_leading",
]

METRIC_NAMES = ("v", "v_bar", "j", "sigma2", "irr", "rho")

DEGENERATE_DENSITY = "degenerate density"


def _require_two_nodes(g):
    if g.n < 2:
        raise UndefinedMetricError("n < 2", f"index undefined for n={g.n} (need at least two nodes)")


def degree_variance(g):
    """Sample variance (``n - 1`` denominator) of the degree sequence.

    Evaluated as ``sum(k^2) / (n-1) - (2m)^2 / (n(n-1))`` from exact integer
    sums, so the only rounding is the final division.
    """
    _require_two_nodes(g)
    n, two_m = g.n, 2 * g.m
    return (n * sum_squared_degrees(g) - two_m * two_m) / (n * (n - 1))


def _is_degenerate(g):
    return g.m == 0 or 2 * g.m == g.n * (g.n - 1)


def normalised_degree_variance(g):
    """Degree variance scaled into ``[0, 1]``.

    ``v_bar = (n - 1) / (n m (1 - d)) * v`` with ``d`` the density. For the
    empty and complete graphs the scale factor divides by zero while the
    variance itself is zero; both return ``0.0``.

    The rational form ``(n-1)(n sum(k^2) - (2m)^2) / (n m (n(n-1) - 2m))``
    is evaluated with integers and one correctly rounded division, so a
    graph and its complement give bit-identical values.
    """
    _require_two_nodes(g)
    if _is_degenerate(g):
        return 0.0
    n, m = g.n, g.m
    num = (n - 1) * (n * sum_squared_degrees(g) - 4 * m * m)
    den = n * m * (n * (n - 1) - 2 * m)
    return num / den


def _quasi_star_variance(n, m):
    return degree_variance(quasi_star(n, m))


def quasi_star_normalisation(g, reference_variance=None):
    """Degree variance divided by that of the quasi-star with the same n and m.

    The quasi-star graph is built explicitly unless ``reference_variance``
    (its precomputed variance) is supplied. Values above one occur whenever
    the quasi-complete graph beats the quasi-star.

    Raises
    ------
    UndefinedMetricError
        If the reference quasi-star has zero variance (empty or complete).
    """
    _require_two_nodes(g)
    ref = _quasi_star_variance(g.n, g.m) if reference_variance is None else reference_variance
    if ref == 0:
        raise UndefinedMetricError("zero quasi-star variance", "quasi-star reference has zero degree variance")
    return degree_variance(g) / ref


def average_degree_normalisation(g):
    """Degree variance divided by the average degree ``2m / n``."""
    _require_two_nodes(g)
    if g.m == 0:
        raise UndefinedMetricError("no edges", "average degree is zero")
    return degree_variance(g) * g.n / (2 * g.m)


def albertson_irregularity(g):
    """Sum over edges of ``|k_i - k_j|``."""
    k = g.degrees
    e = g.edges
    return int(np.abs(k[e[:, 0]] - k[e[:, 1]]).sum())


def estrada_heterogeneity(g):
    """Sum over edges of ``(k_i^-1/2 - k_j^-1/2)^2`` over ``n - 2 sqrt(n-1)``.

    Raises
    ------
    UndefinedMetricError
        For graphs with isolated nodes or with ``n = 2`` (zero denominator).
    """
    _require_two_nodes(g)
    k = g.degrees
    if np.any(k == 0):
        raise UndefinedMetricError("isolated nodes", "heterogeneity index undefined with isolated nodes")
    den = g.n - 2.0 * math.sqrt(g.n - 1)
    if den == 0:
        raise UndefinedMetricError("n = 2", "heterogeneity index denominator vanishes at n = 2")
    inv = 1.0 / np.sqrt(k)
    e = g.edges
    diff = inv[e[:, 0]] - inv[e[:, 1]]
    return float(np.dot(diff, diff)) / den


@dataclass(frozen=True)
class MetricReport:
    """All indices for one graph.

    Undefined entries are ``None``; ``status`` maps each metric name to
    ``"defined"``, ``"defined: <note>"`` or ``"undefined: <reason>"``.
    """

    n: int
    m: int
    v: float | None
    v_bar: float | None
    j: float | None
    sigma2: float | None
    irr: int | None
    rho: float | None
    status: dict = field(default_factory=dict)

    def value(self, name):
        return getattr(self, name)

    def is_defined(self, name):
        return getattr(self, name) is not None

    def as_dict(self):
        return {name: getattr(self, name) for name in METRIC_NAMES}


_FUNCS = {
    "v": degree_variance,
    "v_bar": normalised_degree_variance,
    "j": quasi_star_normalisation,
    "sigma2": average_degree_normalisation,
    "irr": albertson_irregularity,
    "rho": estrada_heterogeneity,
}


def metric_report(g, reference_variance=None):
    """Evaluate every index on ``g`` without aborting on undefined ones."""
    _require_two_nodes(g)
    values, status = {}, {}
    for name, fn in _FUNCS.items():
        try:
            if name == "j":
                values[name] = fn(g, reference_variance=reference_variance)
            else:
                values[name] = fn(g)
            status[name] = "defined"
        except UndefinedMetricError as exc:
            values[name] = None
            status[name] = f"undefined: {exc.reason}"
    if _is_degenerate(g):
        status["v_bar"] = f"defined: {DEGENERATE_DENSITY}"
    return MetricReport(n=g.n, m=g.m, status=status, **values)


# -- closed forms ---------------------------------------------------------


def vbar_perfect_quasi_star(n, p):
    """``2(n-1)(n-p-1) / ((2n-p-1) n)`` for the perfect quasi-star G*(n, p)."""
    if n < 2 or not 0 <= p <= n:
        raise ValueError("need n >= 2 and 0 <= p <= n")
    return 2 * (n - 1) * (n - p - 1) / ((2 * n - p - 1) * n)


def vbar_star_closed_form(n):
    """``(n^3 - 5n^2 + 8n - 4) / (n^3 - 3n^2 + 2n)``, the star graph value."""
    if n < 3:
        raise UndefinedMetricError("n < 3", "star closed form needs n >= 3")
    n = int(n)
    return (n**3 - 5 * n**2 + 8 * n - 4) / (n**3 - 3 * n**2 + 2 * n)


def vbar_random_expectation(n):
    """``2(n-1)/n^2``: the G(n, q) value, independent of ``q``."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 2 * (n - 1) / (n * n)


def vbar_lower_bound(n, d, x, a):
    """Smallest possible v_bar for a graph of density ``d`` with ``x`` nodes of degree ``a``.

    The bound is attained when the other ``n - x`` nodes share the remaining
    degree evenly: ``2x(an - dn(n-1))^2 / (d(1-d) n^3 (n-1)(n-x))``.
    """
    if not 0 < d < 1:
        raise UndefinedMetricError("degenerate density", "bound needs 0 < d < 1")
    if not 0 <= x < n:
        raise UndefinedMetricError("x >= n", "bound needs 0 <= x < n")
    if n < 2 or not 0 <= a <= n - 1:
        raise ValueError("need n >= 2 and 0 <= a <= n - 1")
    gap = a * n - d * n * (n - 1)
    return 2 * x * gap * gap / (d * (1 - d) * n**3 * (n - 1) * (n - x))


def vbar_lower_bound_leading(n, d, x, low_degree):
    """Large-n form of :func:`vbar_lower_bound` for ``a = 1`` or ``a = n - 1``.

    ``(x/n) 2d/(1-d)`` for degree-one nodes, ``(x/n) 2(1-d)/d`` for dominant
    nodes; the two map onto each other under ``d -> 1 - d``.
    """
    if not 0 < d < 1:
        raise UndefinedMetricError("degenerate density", "bound needs 0 < d < 1")
    frac = x / n
    if low_degree:
        return frac * 2 * d / (1 - d)
    return frac * 2 * (1 - d) / d
