"""
Unit tests for filter-labelled datasets
"""

import numpy as np
import pytest

from src.core.exceptions import InvalidInputError, InvalidParameterError, ShapeError
from src.signals.fir import moving_average
from src.train.dataset import (
    Dataset,
    SeedPlan,
    generate_dataset,
    read_dataset_csv,
    write_dataset_csv,
)


@pytest.mark.unit
class TestGenerateDataset:
    """Tests for generate_dataset"""

    def test_size_and_range(self):
        data = generate_dataset(moving_average(2), 1000, (0.0, 1.0), seed=3)
        assert data.size == 1000
        assert data.order == 2
        assert data.inputs.min() >= 0.0 and data.inputs.max() <= 1.0

    def test_targets_are_filter_outputs(self):
        data = generate_dataset(moving_average(3), 50, (-2.0, 5.0), seed=8)
        np.testing.assert_allclose(data.targets, data.inputs.mean(axis=1), atol=1e-12)

    def test_hand_examples(self):
        """Targets use the same tap dot-product the generator applies"""
        assert float(np.array([0.2, 0.4]) @ moving_average(2).taps) == pytest.approx(0.3)
        assert float(np.array([0.3, 0.3, 0.3]) @ moving_average(3).taps) == pytest.approx(0.3)

    def test_deterministic_per_seed(self):
        a = generate_dataset(moving_average(2), 10, seed=5)
        b = generate_dataset(moving_average(2), 10, seed=5)
        c = generate_dataset(moving_average(2), 10, seed=6)
        np.testing.assert_array_equal(a.inputs, b.inputs)
        assert not np.array_equal(a.inputs, c.inputs)

    @pytest.mark.parametrize("input_range", [(1.0, 0.0), (0.5, 0.5), (0.0, float("inf"))])
    def test_invalid_range(self, input_range):
        with pytest.raises(InvalidParameterError):
            generate_dataset(moving_average(2), 10, input_range, seed=0)

    def test_invalid_size(self):
        with pytest.raises(InvalidParameterError):
            generate_dataset(moving_average(2), 0, seed=0)


@pytest.mark.unit
class TestDataset:
    """Tests for Dataset validation"""

    def test_row_count_mismatch(self):
        with pytest.raises(ShapeError):
            Dataset([[0.1, 0.2], [0.3, 0.4]], [0.15])

    def test_non_finite_values(self):
        with pytest.raises(InvalidInputError):
            Dataset([[0.1, np.nan]], [0.1])

    def test_arrays_are_read_only(self):
        data = Dataset([[0.1, 0.2]], [0.15])
        with pytest.raises(ValueError):
            data.inputs[0, 0] = 1.0


@pytest.mark.unit
class TestDatasetCsv:
    """Tests for the dataset CSV format"""

    def test_header_and_exact_values(self, tmp_path):
        data = generate_dataset(moving_average(3), 25, seed=9)
        path = write_dataset_csv(data, tmp_path / "data.csv")
        assert path.read_text().splitlines()[0] == "z_0,z_1,z_2,t"
        loaded = read_dataset_csv(path)
        np.testing.assert_array_equal(loaded.inputs, data.inputs)
        np.testing.assert_array_equal(loaded.targets, data.targets)

    def test_rejects_unknown_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,t\n0.1,0.2,0.15\n")
        with pytest.raises(ShapeError):
            read_dataset_csv(path)


@pytest.mark.unit
class TestSeedPlan:
    """Tests for sub-seed derivation"""

    def test_named_sub_seeds(self):
        plan = SeedPlan.from_seed(2023)
        assert plan.as_dict() == {"data": 2023, "init": 3023, "test": 12023}
