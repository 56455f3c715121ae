"""
Empirical frequency response of a network by sinusoid sweep
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from src.core.constants import (
    DEFAULT_INPUT_RANGE,
    DEFAULT_PROBE_AMPLITUDE,
    DEFAULT_PROBE_LENGTH,
    DEFAULT_PROBE_OFFSET,
    FLOAT_FORMAT,
)
from src.core.exceptions import InvalidParameterError, InvalidProbeError, ShapeError
from src.nnet.model import MlpModel, predict


@dataclass(frozen=True)
class ProbeSignal:
    """s(n) = offset + amplitude * cos(W n), n = 0..length-1"""

    offset: float = DEFAULT_PROBE_OFFSET
    amplitude: float = DEFAULT_PROBE_AMPLITUDE
    length: int = DEFAULT_PROBE_LENGTH

    def __post_init__(self):
        if not (math.isfinite(self.offset) and math.isfinite(self.amplitude)) or self.amplitude <= 0.0:
            raise InvalidProbeError(f"Probe amplitude must be positive and finite, got {self.amplitude}")
        if self.length < 4:
            raise InvalidProbeError(f"Probe length must be >= 4 samples, got {self.length}")

    def check_range(self, input_range: tuple[float, float]):
        lo, hi = input_range
        if self.offset - self.amplitude < lo or self.offset + self.amplitude > hi:
            raise InvalidProbeError(
                f"Probe spans [{self.offset - self.amplitude}, {self.offset + self.amplitude}], "
                f"outside the input range [{lo}, {hi}]"
            )


@dataclass(frozen=True, eq=False)
class EmpiricalResponse:
    grid: np.ndarray
    gain: np.ndarray
    fit_residual: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"omega_rad": self.grid, "gain": self.gain, "fit_residual": self.fit_residual})


def probe_windows(omega: float, order: int, probe: ProbeSignal) -> np.ndarray:
    """Rows [s(n), s(n-1), ..., s(n-M+1)]; the sinusoid extends to negative n"""
    n = np.arange(probe.length)[:, np.newaxis] - np.arange(order)[np.newaxis, :]
    return probe.offset + probe.amplitude * np.cos(omega * n)


def _fit_sinusoid(omega: float, output: np.ndarray) -> tuple[float, float]:
    """Least-squares A sin + B cos + C; returns (sqrt(A^2 + B^2), rms residual)"""
    n = np.arange(output.size)
    columns = [np.cos(omega * n), np.ones(output.size)]
    if abs(math.sin(omega)) > 1e-12:
        columns.insert(0, np.sin(omega * n))
    design = np.stack(columns, axis=1)
    coef, *_ = np.linalg.lstsq(design, output, rcond=None)
    amplitude = math.hypot(coef[0], coef[1]) if design.shape[1] == 3 else abs(coef[0])
    residual = output - design @ coef
    return amplitude, float(np.sqrt(np.mean(residual * residual)))


def empirical_frequency_response(
    model: MlpModel,
    grid: Sequence[float] | np.ndarray,
    probe: ProbeSignal | None = None,
    input_range: tuple[float, float] = DEFAULT_INPUT_RANGE,
) -> EmpiricalResponse:
    """
    Drive the network with sinusoidal windows and measure its gain

    Args:
        model: network whose input is an M-sample window
        grid: frequencies in (0, pi]
        probe: probe waveform; must stay inside input_range
        input_range: range the network was trained on
    """
    probe = probe or ProbeSignal()
    probe.check_range(input_range)
    if model.output_dim != 1:
        raise ShapeError(f"Gain estimation needs a single-output model, got {model.output_dim} outputs")
    omegas = np.asarray(grid, dtype=float)
    if omegas.ndim != 1 or omegas.size == 0:
        raise InvalidParameterError("Frequency grid must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(omegas)) or np.any(omegas <= 0.0) or np.any(omegas > math.pi):
        raise InvalidParameterError("Probe frequencies must lie in (0, pi]")

    gains, residuals = [], []
    for omega in omegas:
        output = predict(model, probe_windows(float(omega), model.input_dim, probe))[:, 0]
        amplitude, residual = _fit_sinusoid(float(omega), output)
        gains.append(amplitude / probe.amplitude)
        residuals.append(residual)
    return EmpiricalResponse(grid=omegas.copy(), gain=np.array(gains), fit_residual=np.array(residuals))


def write_empirical_csv(response: EmpiricalResponse, path: str | Path) -> Path:
    path = Path(path)
    response.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path
