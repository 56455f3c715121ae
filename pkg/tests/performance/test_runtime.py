"""
Performance tests for FilterLab

Training and probing must stay at desk scale.
"""

import time

import numpy as np
import pytest

from src.probe.regions import Box, enumerate_regions
from src.probe.response import empirical_frequency_response
from src.signals.fir import moving_average
from src.signals.spectrum import cutoff_frequency, magnitude_response, response_grid, side_lobe_peak


@pytest.mark.performance
class TestRuntime:
    """Wall-clock budgets"""

    @pytest.mark.slow
    def test_suite_trains_within_a_minute(self, suite_result):
        """Performance test: four networks train in under 60 seconds."""
        assert suite_result.duration_s <= 60, f"Suite took {suite_result.duration_s:.1f}s, should be under 60s"

    def test_spectral_analysis_is_fast(self):
        """Performance test: response, cutoff and side lobe take milliseconds."""
        start_time = time.perf_counter()
        fir = moving_average(3)
        magnitude_response(fir, response_grid(1024))
        cutoff_frequency(fir)
        side_lobe_peak(fir)
        elapsed = time.perf_counter() - start_time

        assert elapsed < 0.5, f"Spectral analysis took {elapsed:.3f}s, should be under 0.5s"

    def test_region_scan_is_fast(self, printed_relu_model):
        """Performance test: a 401x401 region scan finishes quickly."""
        start_time = time.perf_counter()
        enumerate_regions(printed_relu_model, Box.cube(2), 401)
        elapsed = time.perf_counter() - start_time

        assert elapsed < 5, f"Region scan took {elapsed:.2f}s, should be under 5s"

    def test_sweep_is_fast(self, exact_model):
        """Performance test: a 64-frequency sweep finishes quickly."""
        start_time = time.perf_counter()
        empirical_frequency_response(exact_model, np.arange(1, 65) * np.pi / 64)
        elapsed = time.perf_counter() - start_time

        assert elapsed < 5, f"Sweep took {elapsed:.2f}s, should be under 5s"
