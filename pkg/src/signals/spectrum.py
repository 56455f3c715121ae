"""
Closed-form magnitude analysis of FIR filters
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from src.core.constants import (
    CUTOFF_TOLERANCE,
    DEFAULT_GAIN_THRESHOLD,
    DEFAULT_RESPONSE_POINTS,
    FLOAT_FORMAT,
    MAX_MOVING_AVERAGE_ORDER,
    NOMINAL_DIVISIONS,
    SCAN_POINTS,
    ZERO_TOLERANCE,
)
from src.core.exceptions import (
    InvalidParameterError,
    NoBandEdgeError,
    NoCrossingError,
    NoSideLobeError,
)
from src.signals.fir import FirFilter, moving_average

GOLDEN_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FrequencyResponse:
    """Sampled |H(e^{jW})| over an ascending grid in [0, pi]"""

    grid: np.ndarray
    magnitude: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"omega_rad": self.grid, "magnitude": self.magnitude})


@dataclass(frozen=True)
class SideLobe:
    omega: float
    magnitude: float


def response_grid(points: int = DEFAULT_RESPONSE_POINTS) -> np.ndarray:
    """Evenly spaced grid on [0, pi]"""
    if points < 2:
        raise InvalidParameterError(f"Response grid needs at least 2 points, got {points}")
    return np.linspace(0.0, math.pi, points)


def _validate_omega(omega: float, name: str = "omega"):
    if not math.isfinite(omega) or omega < 0.0 or omega > math.pi:
        raise InvalidParameterError(f"{name}={omega} must lie in [0, pi]")


def _magnitude(taps: np.ndarray, omegas: np.ndarray) -> np.ndarray:
    phase = np.multiply.outer(np.atleast_1d(omegas), np.arange(taps.size))
    real = np.cos(phase) @ taps
    imag = -(np.sin(phase) @ taps)
    return np.hypot(real, imag)


def gain_at(fir: FirFilter, omega: float) -> float:
    """|H(e^{jW})| at a single frequency"""
    _validate_omega(omega)
    return float(_magnitude(fir.taps, np.array([omega]))[0])


def magnitude_response(fir: FirFilter, grid: Sequence[float] | np.ndarray) -> FrequencyResponse:
    """
    Evaluate |sum_k w[k] e^{-jWk}| on a frequency grid

    Args:
        fir: filter under analysis
        grid: strictly ascending frequencies in [0, pi] (rad/sample)
    """
    omegas = np.asarray(grid, dtype=float)
    if omegas.ndim != 1 or omegas.size == 0:
        raise InvalidParameterError("Frequency grid must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(omegas)) or omegas[0] < 0.0 or omegas[-1] > math.pi:
        raise InvalidParameterError("Frequency grid values must lie in [0, pi]")
    if np.any(np.diff(omegas) <= 0.0):
        raise InvalidParameterError("Frequency grid must be strictly ascending")
    return FrequencyResponse(grid=omegas.copy(), magnitude=_magnitude(fir.taps, omegas))


def in_pass_band(fir: FirFilter, omega: float, threshold: float = DEFAULT_GAIN_THRESHOLD) -> bool:
    return gain_at(fir, omega) >= threshold


def cutoff_frequency(fir: FirFilter, threshold: float = DEFAULT_GAIN_THRESHOLD) -> float:
    """
    First frequency where the gain drops below `threshold`

    The crossing is bracketed on a dense scan of [0, pi] and refined by
    bisection to CUTOFF_TOLERANCE rad.
    """
    if not 0.0 < threshold < fir.dc_gain:
        raise InvalidParameterError(
            f"Threshold {threshold} must lie strictly between 0 and the DC gain {fir.dc_gain}"
        )
    grid = np.linspace(0.0, math.pi, SCAN_POINTS)
    below = np.flatnonzero(_magnitude(fir.taps, grid) < threshold)
    if below.size == 0:
        raise NoCrossingError(f"Gain never drops below {threshold} on [0, pi]")

    lo, hi = grid[below[0] - 1], grid[below[0]]
    while hi - lo > CUTOFF_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if _magnitude(fir.taps, np.array([mid]))[0] < threshold:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def nominal_cutoff(
    fir: FirFilter,
    threshold: float = DEFAULT_GAIN_THRESHOLD,
    divisions: int = NOMINAL_DIVISIONS,
) -> float:
    """Largest k*pi/divisions still inside the pass band"""
    omega_c = cutoff_frequency(fir, threshold)
    step = math.pi / divisions
    k = math.floor(omega_c / step)
    while k > 0 and gain_at(fir, k * step) < threshold:
        k -= 1
    if k == 0:
        raise NoBandEdgeError(f"No multiple of pi/{divisions} lies inside the pass band")
    return k * step


def _golden_section(fn: Callable[[float], float], lo: float, hi: float, maximize: bool) -> float:
    sign = -1.0 if maximize else 1.0
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = sign * fn(c), sign * fn(d)
    while b - a > GOLDEN_TOLERANCE:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = sign * fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = sign * fn(d)
    return 0.5 * (a + b)


def first_spectral_zero(fir: FirFilter) -> float:
    """Smallest frequency in (0, pi) where |H| vanishes"""
    taps = fir.taps
    grid = np.linspace(0.0, math.pi, SCAN_POINTS)
    mag = _magnitude(taps, grid)
    scale = max(float(np.sum(np.abs(taps))), 1.0)

    def gain(omega: float) -> float:
        return float(_magnitude(taps, np.array([omega]))[0])

    for i in range(1, grid.size - 1):
        if mag[i] <= mag[i - 1] and mag[i] <= mag[i + 1]:
            omega = _golden_section(gain, grid[i - 1], grid[i + 1], maximize=False)
            if gain(omega) <= ZERO_TOLERANCE * scale:
                return omega
    raise NoSideLobeError("Magnitude response has no zero inside (0, pi)")


def side_lobe_peak(fir: FirFilter, search_start: float | None = None) -> SideLobe:
    """
    Largest gain beyond the first spectral zero

    Args:
        fir: filter under analysis
        search_start: start of the search interval; defaults to the first zero in (0, pi)
    """
    if search_start is None:
        search_start = first_spectral_zero(fir)
    else:
        _validate_omega(search_start, "search_start")
        if search_start >= math.pi:
            raise InvalidParameterError("search_start must lie below pi")

    taps = fir.taps

    def gain(omega: float) -> float:
        return float(_magnitude(taps, np.array([omega]))[0])

    grid = np.linspace(search_start, math.pi, SCAN_POINTS)
    i = int(np.argmax(_magnitude(taps, grid)))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    refined = _golden_section(gain, lo, hi, maximize=True)
    best = max((refined, lo, hi), key=gain)
    return SideLobe(omega=float(best), magnitude=gain(best))


def narrowest_moving_average(
    omega_target: float,
    threshold: float = DEFAULT_GAIN_THRESHOLD,
    max_order: int = MAX_MOVING_AVERAGE_ORDER,
) -> FirFilter:
    """Grow the moving-average order while omega_target stays in the pass band"""
    if not math.isfinite(omega_target) or not 0.0 < omega_target <= math.pi:
        raise InvalidParameterError(f"Target frequency {omega_target} must lie in (0, pi]")
    order = 1
    while order < max_order and in_pass_band(moving_average(order + 1), omega_target, threshold):
        order += 1
    return moving_average(order)


def digital_to_analog(omega: float, sampling_rate_hz: float) -> float:
    """Map a digital frequency (rad/sample) to Hz"""
    _validate_omega(omega)
    if not math.isfinite(sampling_rate_hz) or sampling_rate_hz <= 0.0:
        raise InvalidParameterError(f"Sampling rate must be positive, got {sampling_rate_hz}")
    return omega * sampling_rate_hz / (2.0 * math.pi)


def write_response_csv(response: FrequencyResponse, path: str | Path) -> Path:
    path = Path(path)
    response.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path
