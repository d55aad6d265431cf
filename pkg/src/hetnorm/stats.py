"""Small statistics toolkit for the experiment harnesses."""

import itertools
import math

import numpy as np
from scipy import stats as _sps

from .exceptions import UndefinedMetricError

__all__ = ["spearman", "coefficient_of_variation", "median_and_iqr", "rank_average"]

EXACT_MAX_N = 10


def _sample(x, name="x"):
    a = np.asarray(x, dtype=np.float64).ravel()
    if a.size == 0:
        raise ValueError(f"{name} is empty")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains NaN or infinite values")
    return a


def rank_average(x):
    """Ranks ``1..N`` with ties sharing their mean rank."""
    return _sps.rankdata(_sample(x), method="average")


def _pearson(a, b):
    a = a - a.mean()
    b = b - b.mean()
    den = math.sqrt(float(np.dot(a, a)) * float(np.dot(b, b)))
    if den == 0:
        raise UndefinedMetricError("constant input", "rank variance is zero")
    return float(np.dot(a, b)) / den


def spearman(x, y, method="t"):
    """Spearman rank correlation and two-sided p-value.

    Parameters
    ----------
    x, y : array-like
        Paired samples of equal length ``N >= 3``.
    method : {"t", "exact"}
        ``"t"`` uses ``t = r sqrt((N-2) / (1-r^2))`` on ``N-2`` degrees of
        freedom. ``"exact"`` enumerates every permutation of ``y``'s ranks
        (only for ``N <= 10``).

    Returns
    -------
    (r_s, p) : tuple of float
    """
    rx, ry = rank_average(x), rank_average(y)
    if rx.size != ry.size:
        raise ValueError("samples differ in length")
    n = rx.size
    if n < 3:
        raise ValueError("need at least three pairs")
    r = _pearson(rx, ry)
    r = max(-1.0, min(1.0, r))
    if method == "t":
        if abs(r) == 1.0:
            return r, 0.0
        t = r * math.sqrt((n - 2) / (1.0 - r * r))
        return r, float(2.0 * _sps.t.sf(abs(t), n - 2))
    if method == "exact":
        if n > EXACT_MAX_N:
            raise ValueError(f"exact p-value limited to N <= {EXACT_MAX_N}")
        cx = rx - rx.mean()
        cy = ry - ry.mean()
        scale = math.sqrt(float(np.dot(cx, cx)) * float(np.dot(cy, cy)))
        observed = abs(r) - 1e-12
        hits = total = 0
        for chunk in _batched(itertools.permutations(range(n)), 50_000):
            perms = np.array(chunk)
            rs = (cy[perms] @ cx) / scale
            hits += int(np.count_nonzero(np.abs(rs) >= observed))
            total += perms.shape[0]
        return r, hits / total
    raise ValueError(f"unknown method {method!r}")


def _batched(iterable, size):
    it = iter(iterable)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def coefficient_of_variation(x):
    """Sample standard deviation (``ddof=1``) over the mean.

    A single value has no spread and gives ``0.0``.
    """
    a = _sample(x)
    mean = float(a.mean())
    if mean == 0:
        raise UndefinedMetricError("zero mean", "coefficient of variation undefined for zero mean")
    if a.size == 1:
        return 0.0
    return float(a.std(ddof=1)) / mean


def median_and_iqr(x):
    """``(median, q1, q3)`` using linear interpolation between order statistics."""
    a = _sample(x)
    q1, med, q3 = np.percentile(a, [25, 50, 75], method="linear")
    return float(med), float(q1), float(q3)
