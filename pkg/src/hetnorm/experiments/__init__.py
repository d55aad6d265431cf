"""Experiment suites: density sweeps, timing, corpus correlation, subsampling."""

from .corpus import CorrelationReport, corpus_correlation
from .stability import (
    CovSummary,
    SweepTable,
    cov_vs_density,
    cov_vs_size,
    replicate_seed,
    stability_sweep,
)
from .subsampling import (
    REMOVAL_MODES,
    RobustnessRecord,
    SamplerFallbackWarning,
    inverse_degree_removal,
    inverse_degree_weights,
    robustness_suite,
    robustness_table,
    subsample_edges_inverse_degree,
    subsample_edges_uniform,
    subsample_nodes,
)
from .timing import BenchRecord, bench_graph, timing_benchmark

__all__ = [
    "BenchRecord",
    "CorrelationReport",
    "CovSummary",
    "REMOVAL_MODES",
    "RobustnessRecord",
    "SamplerFallbackWarning",
    "SweepTable",
    "bench_graph",
    "corpus_correlation",
    "cov_vs_density",
    "cov_vs_size",
    "inverse_degree_removal",
    "inverse_degree_weights",
    "replicate_seed",
    "robustness_suite",
    "robustness_table",
    "stability_sweep",
    "subsample_edges_inverse_degree",
    "subsample_edges_uniform",
    "subsample_nodes",
    "timing_benchmark",
]
