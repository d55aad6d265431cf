import itertools

import numpy as np
import pytest
from scipy import stats as sps

from hetnorm import UndefinedMetricError
from hetnorm.stats import coefficient_of_variation, median_and_iqr, rank_average, spearman


class TestSpearman:
    def test_monotone(self):
        x = np.arange(1, 11, dtype=float)
        assert spearman(x, x**2)[0] == 1.0
        assert spearman(x, x[::-1])[0] == -1.0
        assert spearman(x, x**2)[1] == 0.0

    def test_hand_computed(self):
        x, y = [1, 2, 3, 4, 5], [2, 1, 4, 3, 5]
        # d = (-1, 1, -1, 1, 0): 1 - 6 * 4 / (5 * 24) = 0.8
        r, p = spearman(x, y)
        assert r == pytest.approx(0.8, abs=1e-15)
        ref = sps.spearmanr(x, y)
        assert r == pytest.approx(ref.statistic, abs=1e-15)
        assert p == pytest.approx(ref.pvalue, rel=1e-10)

    def test_ties_use_average_ranks(self):
        assert rank_average([10, 20, 20, 30]).tolist() == [1, 2.5, 2.5, 4]
        x, y = [1, 2, 2, 3, 4, 4, 5], [3, 1, 2, 2, 5, 4, 4]
        assert spearman(x, y)[0] == pytest.approx(sps.spearmanr(x, y).statistic, abs=1e-14)

    def test_exact_p_value(self):
        r, p = spearman([1, 2, 3, 4, 5], [2, 1, 4, 3, 5], method="exact")
        assert r == pytest.approx(0.8)
        # independent oracle: count permutations with |1 - 6 sum d^2 / (n(n^2-1))| >= 0.8
        n = 5
        hits = 0
        for perm in itertools.permutations(range(1, n + 1)):
            d2 = sum((i + 1 - v) ** 2 for i, v in enumerate(perm))
            hits += abs(1 - 6 * d2 / (n * (n * n - 1))) >= 0.8 - 1e-12
        assert hits == 16
        assert p == pytest.approx(hits / 120)

    def test_constant_input_undefined(self):
        with pytest.raises(UndefinedMetricError):
            spearman([1, 1, 1], [1, 2, 3])

    @pytest.mark.parametrize(
        "x, y, kwargs",
        [([1, 2], [1, 2], {}), ([1, 2, 3], [1, 2], {}), ([1, 2, np.nan], [1, 2, 3], {}), ([1, 2, 3], [3, 2, 1], {"method": "x"})],
    )
    def test_invalid(self, x, y, kwargs):
        with pytest.raises(ValueError):
            spearman(x, y, **kwargs)

    def test_exact_limited_to_small_samples(self):
        with pytest.raises(ValueError):
            spearman(range(11), range(11), method="exact")


class TestCoefficientOfVariation:
    def test_examples(self):
        assert coefficient_of_variation([5, 5, 5]) == 0.0
        assert coefficient_of_variation([1, 2, 3]) == pytest.approx(0.5)
        assert coefficient_of_variation([7]) == 0.0

    def test_zero_mean(self):
        with pytest.raises(UndefinedMetricError):
            coefficient_of_variation([-1, 1])

    def test_empty(self):
        with pytest.raises(ValueError):
            coefficient_of_variation([])


class TestMedianAndIqr:
    def test_examples(self):
        assert median_and_iqr([1, 2, 3, 4, 5]) == (3.0, 2.0, 4.0)
        assert median_and_iqr([7]) == (7.0, 7.0, 7.0)
        assert median_and_iqr([1, 2, 3, 4]) == (2.5, 1.75, 3.25)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            median_and_iqr([1, np.inf])
