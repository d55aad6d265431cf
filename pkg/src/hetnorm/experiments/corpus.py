"""Correlation of heterogeneity indices with average degree across a corpus."""

from dataclasses import dataclass, field

from ..exceptions import UndefinedMetricError
from ..graph import density
from ..metrics import estrada_heterogeneity, normalised_degree_variance
from ..stats import median_and_iqr, spearman
from ._common import pmap

__all__ = ["CorrelationReport", "corpus_correlation"]

CORPUS_COLUMNS = ("network_id", "n", "m", "density", "average_degree", "v_bar", "rho", "rho_reason")


@dataclass
class CorrelationReport:
    """Spearman correlations against average degree plus value summaries.

    ``*_r`` and ``*_p`` are ``None`` when the correlation is undefined (for
    example constant input); the matching ``*_reason`` says why.
    """

    n_networks: int
    v_bar_r: float | None
    v_bar_p: float | None
    v_bar_reason: str | None
    rho_r: float | None
    rho_p: float | None
    rho_reason: str | None
    rho_n_excluded: int
    size_density_r: float | None
    size_density_p: float | None
    v_bar_summary: tuple
    rho_summary: tuple | None
    rows: list = field(default_factory=list)

    def summary(self):
        return {k: v for k, v in self.__dict__.items() if k != "rows"}


def _row(item):
    nid, g = item
    row = {"network_id": nid, "n": g.n, "m": g.m}
    row["density"] = density(g)
    row["average_degree"] = (g.n - 1) * row["density"]
    row["v_bar"] = normalised_degree_variance(g)
    try:
        row["rho"], row["rho_reason"] = estrada_heterogeneity(g), None
    except UndefinedMetricError as exc:
        row["rho"], row["rho_reason"] = None, exc.reason
    return row


def _correlate(x, y):
    if len(x) < 3:
        return None, None, "fewer than three defined values"
    try:
        r, p = spearman(x, y)
    except UndefinedMetricError as exc:
        return None, None, exc.reason
    return r, p, None


def corpus_correlation(corpus, threads=1):
    """Spearman correlation of v_bar and rho with average degree ``(n-1) d``.

    Networks where rho is undefined are dropped from its correlation and
    counted in ``rho_n_excluded``.
    """
    items = [(str(c[0]), c[1]) if isinstance(c, tuple) else (f"net{i:04d}", c) for i, c in enumerate(corpus)]
    if len(items) < 10:
        raise ValueError("corpus_correlation needs at least 10 networks")
    rows = pmap(_row, items, threads)
    avg = [r["average_degree"] for r in rows]
    vb = [r["v_bar"] for r in rows]
    vr, vp, vwhy = _correlate(avg, vb)
    rho_rows = [r for r in rows if r["rho"] is not None]
    rr, rp, rwhy = _correlate([r["average_degree"] for r in rho_rows], [r["rho"] for r in rho_rows])
    sr, sp, _ = _correlate([r["n"] for r in rows], [r["density"] for r in rows])
    return CorrelationReport(
        n_networks=len(rows),
        v_bar_r=vr,
        v_bar_p=vp,
        v_bar_reason=vwhy,
        rho_r=rr,
        rho_p=rp,
        rho_reason=rwhy,
        rho_n_excluded=len(rows) - len(rho_rows),
        size_density_r=sr,
        size_density_p=sp,
        v_bar_summary=median_and_iqr(vb),
        rho_summary=median_and_iqr([r["rho"] for r in rho_rows]) if rho_rows else None,
        rows=rows,
    )
