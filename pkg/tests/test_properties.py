import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hetnorm import (
    complement,
    degree_variance,
    density,
    normalised_degree_variance,
    sum_squared_degrees,
    threshold_to_density,
    vbar_lower_bound,
    WeightedGraph,
)
from hetnorm.stats import coefficient_of_variation, spearman
from strategies import graphs, regular_graphs

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@given(graphs())
def test_de_caen_bound(g):
    assert sum_squared_degrees(g) * (g.n - 1) <= g.m * (2 * g.m + (g.n - 2) * (g.n - 1))


@given(graphs())
def test_vbar_in_unit_interval(g):
    assert 0.0 <= normalised_degree_variance(g) <= 1.0 + 1e-12


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_complement_equality(g):
    assert normalised_degree_variance(g) == normalised_degree_variance(complement(g))


@given(regular_graphs())
def test_regular_graphs_are_zero(g):
    assert degree_variance(g) == 0.0
    assert normalised_degree_variance(g) == 0.0


@given(graphs())
def test_variance_identity(g):
    k = g.degrees.astype(float)
    assert np.isclose(degree_variance(g), np.var(k, ddof=1), rtol=1e-9, atol=1e-12)


@given(graphs(min_nodes=4), st.data())
def test_lower_bound_soundness(g, data):
    d = density(g)
    if not 0 < d < 1:
        return
    a = data.draw(st.sampled_from(sorted(set(g.degrees.tolist()))))
    x = int(np.count_nonzero(g.degrees == a))
    if x >= g.n:
        return
    assert normalised_degree_variance(g) >= vbar_lower_bound(g.n, d, x, a) - 1e-12


def _weights(n):
    return arrays(np.float64, (n * (n - 1) // 2,), elements=st.floats(0.01, 100, allow_nan=False)).map(
        lambda v: _symmetric(n, v)
    )


def _symmetric(n, upper):
    w = np.zeros((n, n))
    w[np.triu_indices(n, 1)] = upper
    return w + w.T


@given(st.integers(3, 12).flatmap(_weights), st.floats(0, 1), st.floats(0, 1))
def test_threshold_monotone_in_density(w, d1, d2):
    wg = WeightedGraph(w)
    lo, hi = sorted((d1, d2))
    assert threshold_to_density(wg, lo).edge_set() <= threshold_to_density(wg, hi).edge_set()


@given(st.integers(3, 12).flatmap(_weights), st.floats(0, 1))
def test_threshold_rank_invariant(w, d):
    assert threshold_to_density(WeightedGraph(w), d) == threshold_to_density(WeightedGraph(np.sqrt(w) * 3), d)


@given(st.lists(st.integers(-1000, 1000), min_size=4, max_size=40), st.data())
def test_spearman_monotone_invariance(x, data):
    y = data.draw(st.lists(st.integers(-1000, 1000), min_size=len(x), max_size=len(x)))
    if len(set(x)) < 2 or len(set(y)) < 2:
        return
    r, _ = spearman(x, y)
    # integer cubes are exact in float64, so ties are preserved
    r2, _ = spearman(np.arcsinh(np.array(x, dtype=float)) * 7, [v**3 for v in y])
    assert np.isclose(r, r2, atol=1e-12)


@given(st.lists(st.floats(0.1, 1e3), min_size=2, max_size=30), st.floats(0.01, 100))
def test_cov_scale_invariance(x, c):
    assert np.isclose(coefficient_of_variation(x), coefficient_of_variation(np.array(x) * c), rtol=1e-9, atol=1e-12)
