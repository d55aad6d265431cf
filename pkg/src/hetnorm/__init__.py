"""Normalised degree variance and competing graph heterogeneity indices."""

__version__ = "0.1.0"

from .exceptions import GraphFormatError, UndefinedMetricError
from .graph import Graph, complement, degree_sequence, density, sum_squared_degrees
from .metrics import (
    METRIC_NAMES,
    MetricReport,
    albertson_irregularity,
    average_degree_normalisation,
    degree_variance,
    estrada_heterogeneity,
    metric_report,
    normalised_degree_variance,
    quasi_star_normalisation,
    vbar_lower_bound,
    vbar_lower_bound_leading,
    vbar_perfect_quasi_star,
    vbar_random_expectation,
    vbar_star_closed_form,
)
from .weighted import WeightedGraph, density_sweep, load_weighted_matrix, threshold_to_density

__all__ = [
    "GraphFormatError",
    "UndefinedMetricError",
    "Graph",
    "complement",
    "degree_sequence",
    "density",
    "sum_squared_degrees",
    "METRIC_NAMES",
    "MetricReport",
    "albertson_irregularity",
    "average_degree_normalisation",
    "degree_variance",
    "estrada_heterogeneity",
    "metric_report",
    "normalised_degree_variance",
    "quasi_star_normalisation",
    "vbar_lower_bound",
    "vbar_lower_bound_leading",
    "vbar_perfect_quasi_star",
    "vbar_random_expectation",
    "vbar_star_closed_form",
    "WeightedGraph",
    "density_sweep",
    "load_weighted_matrix",
    "threshold_to_density",
]
