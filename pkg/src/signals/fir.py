"""
Explicit FIR filters: construction and causal filtering
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import InvalidInputError, InvalidParameterError


@dataclass(frozen=True)
class FirFilter:
    """Impulse response w[0..M-1] of y[n] = sum_k w[k] x[n-k]"""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise InvalidParameterError("FIR filter needs at least one tap")
        for index, coeff in enumerate(coeffs):
            if not math.isfinite(coeff):
                raise InvalidParameterError(f"Invalid w[{index}]={coeff}: taps must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def taps(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    @property
    def dc_gain(self) -> float:
        return abs(math.fsum(self.coeffs))


def moving_average(order: int) -> FirFilter:
    """Moving-average filter with `order` equal taps of 1/order"""
    if isinstance(order, bool) or not isinstance(order, (int, np.integer)) or order < 1:
        raise InvalidParameterError(f"Moving-average order must be a positive integer, got {order!r}")
    return FirFilter((1.0 / order,) * int(order))


def apply(fir: FirFilter, signal: Sequence[float] | np.ndarray) -> np.ndarray:
    """
    Filter a signal with zero initial conditions

    Args:
        fir: filter to apply
        signal: finite 1-D input x[0..N-1]; x[j] is taken as 0 for j < 0

    Returns:
        Output y[0..N-1], same length as the input
    """
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise InvalidInputError("Signal must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("Signal contains non-finite samples")
    return np.convolve(x, fir.taps)[: x.size]
