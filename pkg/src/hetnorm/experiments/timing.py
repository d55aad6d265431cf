"""Wall-clock comparison of v_bar, J and rho on sparse scale-free graphs."""

import time
from dataclasses import dataclass

import numpy as np

from .._rng import derive_seed
from ..generators import scale_free
from ..metrics import estrada_heterogeneity, normalised_degree_variance, quasi_star_normalisation

__all__ = ["BenchRecord", "BENCH_METRICS", "timing_benchmark", "bench_graph"]

BENCH_METRICS = {
    "v_bar": normalised_degree_variance,
    "rho": estrada_heterogeneity,
    "j": quasi_star_normalisation,
}

BENCH_COLUMNS = ("metric", "n", "m", "replicates", "mean_seconds", "min_seconds", "max_seconds")


@dataclass(frozen=True)
class BenchRecord:
    metric: str
    n: int
    m: int
    times: tuple

    @property
    def mean_time(self):
        return float(np.mean(self.times))

    def as_row(self):
        return {
            "metric": self.metric,
            "n": self.n,
            "m": self.m,
            "replicates": len(self.times),
            "mean_seconds": self.mean_time,
            "min_seconds": min(self.times),
            "max_seconds": max(self.times),
        }


def bench_graph(n, seed):
    """The scale-free graph timed at size ``n`` for master seed ``seed``."""
    return scale_free(n, derive_seed(seed, "bench", n))


def timing_benchmark(sizes, replicates, seed, metrics=None):
    """Time each metric ``replicates`` times per graph size.

    Graph construction happens outside the timed region and one warm-up
    call per metric is discarded. J is timed including construction of its
    reference quasi-star graph, which is intrinsic to that index.
    """
    if replicates < 1:
        raise ValueError("replicates must be positive")
    names = list(metrics or BENCH_METRICS)
    records = []
    for n in sizes:
        g = bench_graph(int(n), seed)
        for name in names:
            fn = BENCH_METRICS[name]
            fn(g)
            times = []
            for _ in range(replicates):
                t0 = time.perf_counter()
                fn(g)
                times.append(time.perf_counter() - t0)
            records.append(BenchRecord(name, g.n, g.m, tuple(times)))
    return records
