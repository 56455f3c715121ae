"""
Explicit FIR filtering and closed-form spectral analysis
"""

from src.signals.fir import FirFilter, apply, moving_average
from src.signals.spectrum import (
    FrequencyResponse,
    SideLobe,
    cutoff_frequency,
    digital_to_analog,
    first_spectral_zero,
    gain_at,
    in_pass_band,
    magnitude_response,
    narrowest_moving_average,
    nominal_cutoff,
    response_grid,
    side_lobe_peak,
    write_response_csv,
)

__all__ = [
    "FirFilter",
    "FrequencyResponse",
    "SideLobe",
    "apply",
    "cutoff_frequency",
    "digital_to_analog",
    "first_spectral_zero",
    "gain_at",
    "in_pass_band",
    "magnitude_response",
    "moving_average",
    "narrowest_moving_average",
    "nominal_cutoff",
    "response_grid",
    "side_lobe_peak",
    "write_response_csv",
]
