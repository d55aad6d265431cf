"""scikit-learn compatible wrappers.

``ProportionalThreshold`` turns weighted matrices into binary graphs and
``HeterogeneityTransformer`` turns graphs into a feature matrix of
heterogeneity indices, so both drop into a :class:`sklearn.pipeline.Pipeline`::

    Pipeline([("bin", ProportionalThreshold(0.1)),
              ("het", HeterogeneityTransformer(metrics=("v_bar", "rho")))])
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import UndefinedMetricError
from .metrics import METRIC_NAMES, metric_report
from .validation import check_density, check_graphs, check_weighted
from .weighted import threshold_to_density

__all__ = ["HeterogeneityTransformer", "ProportionalThreshold"]


class HeterogeneityTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to a row of heterogeneity indices.

    Parameters
    ----------
    metrics : tuple of str, default=("v_bar", "j", "sigma2", "rho")
        Any of ``v``, ``v_bar``, ``j``, ``sigma2``, ``irr``, ``rho``.
    undefined : {"nan", "raise"}, default="nan"
        What to do when an index is undefined for a graph.

    Attributes
    ----------
    feature_names_out_ : ndarray of str
    """

    def __init__(self, metrics=("v_bar", "j", "sigma2", "rho"), undefined="nan"):
        self.metrics = metrics
        self.undefined = undefined

    def _validate_params(self):
        unknown = [m for m in self.metrics if m not in METRIC_NAMES]
        if unknown or not len(self.metrics):
            raise ValueError(f"metrics must be a nonempty subset of {METRIC_NAMES}; unknown: {unknown}")
        if self.undefined not in ("nan", "raise"):
            raise ValueError("undefined must be 'nan' or 'raise'")

    def fit(self, X, y=None):
        self._validate_params()
        check_graphs(X)
        self.feature_names_out_ = np.asarray(list(self.metrics), dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        graphs = check_graphs(X)
        out = np.empty((len(graphs), len(self.metrics)))
        for i, g in enumerate(graphs):
            rep = metric_report(g)
            for j, name in enumerate(self.metrics):
                val = rep.value(name)
                if val is None:
                    if self.undefined == "raise":
                        raise UndefinedMetricError(rep.status[name].split(": ", 1)[-1], f"graph {i}: {name} {rep.status[name]}")
                    val = np.nan
                out[i, j] = val
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.requires_fit = True
        return tags


class ProportionalThreshold(TransformerMixin, BaseEstimator):
    """Binarise weighted matrices by keeping the strongest ``density`` fraction of pairs.

    Stateless; :meth:`fit` only validates ``density``.
    """

    def __init__(self, density=0.1):
        self.density = density

    def fit(self, X, y=None):
        check_density(self.density)
        self.fitted_ = True
        return self

    def transform(self, X):
        check_is_fitted(self, "fitted_")
        d = check_density(self.density)
        if isinstance(X, np.ndarray) and X.ndim == 2:
            X = [X]
        return [threshold_to_density(check_weighted(w), d) for w in X]

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        return tags
