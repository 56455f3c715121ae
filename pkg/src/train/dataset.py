"""
Filter-labelled datasets and seed bookkeeping
"""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from src.core.constants import (
    DEFAULT_INPUT_RANGE,
    FLOAT_FORMAT,
    INIT_SEED_OFFSET,
    TEST_SEED_OFFSET,
)
from src.core.exceptions import InvalidInputError, InvalidParameterError, ShapeError
from src.signals.fir import FirFilter


@dataclass(frozen=True)
class SeedPlan:
    """Named sub-seeds derived from one run seed"""

    data: int
    init: int
    test: int

    @classmethod
    def from_seed(cls, seed: int) -> "SeedPlan":
        return cls(data=seed, init=seed + INIT_SEED_OFFSET, test=seed + TEST_SEED_OFFSET)

    def as_dict(self) -> dict[str, int]:
        return {"data": self.data, "init": self.init, "test": self.test}


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Rows z_i = [x[n], x[n-1], ..., x[n-M+1]] with targets t_i

    Column k of `inputs` lines up with tap w[k] of the generating filter.
    """

    inputs: np.ndarray
    targets: np.ndarray
    input_range: tuple[float, float] = DEFAULT_INPUT_RANGE

    def __post_init__(self):
        inputs = np.array(self.inputs, dtype=float)
        targets = np.array(self.targets, dtype=float).reshape(-1)
        if inputs.ndim != 2 or inputs.shape[0] == 0 or inputs.shape[1] == 0:
            raise ShapeError(f"Dataset inputs must be a non-empty (T, M) matrix, got {inputs.shape}")
        if targets.shape[0] != inputs.shape[0]:
            raise ShapeError(f"{inputs.shape[0]} input rows but {targets.shape[0]} targets")
        if not (np.all(np.isfinite(inputs)) and np.all(np.isfinite(targets))):
            raise InvalidInputError("Dataset contains non-finite values")
        inputs.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "input_range", _check_range(self.input_range))

    @property
    def size(self) -> int:
        return self.inputs.shape[0]

    @property
    def order(self) -> int:
        return self.inputs.shape[1]

    @property
    def target_matrix(self) -> np.ndarray:
        return self.targets[:, np.newaxis]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.inputs, columns=[f"z_{k}" for k in range(self.order)])
        frame["t"] = self.targets
        return frame


def _check_range(input_range) -> tuple[float, float]:
    lo, hi = (float(v) for v in input_range)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise InvalidParameterError(f"Input range must satisfy lo < hi, got [{lo}, {hi}]")
    return lo, hi


def generate_dataset(
    fir: FirFilter,
    size: int,
    input_range: tuple[float, float] = DEFAULT_INPUT_RANGE,
    seed: int | None = None,
) -> Dataset:
    """
    Draw T windows uniformly on [lo, hi] and label them with the filter output

    Args:
        fir: generating filter S
        size: number of rows T
        input_range: (lo, hi) bounds of every window sample
        seed: RNG seed
    """
    if isinstance(size, bool) or size < 1:
        raise InvalidParameterError(f"Dataset size must be >= 1, got {size}")
    lo, hi = _check_range(input_range)
    rng = np.random.default_rng(seed)
    inputs = rng.uniform(lo, hi, size=(int(size), fir.order))
    logger.debug(f"Generated {size} windows of order {fir.order} on [{lo}, {hi}] (seed={seed})")
    return Dataset(inputs=inputs, targets=inputs @ fir.taps, input_range=(lo, hi))


def write_dataset_csv(data: Dataset, path: str | Path) -> Path:
    path = Path(path)
    data.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path


def read_dataset_csv(path: str | Path, input_range: tuple[float, float] = DEFAULT_INPUT_RANGE) -> Dataset:
    """Read a `z_0..z_{M-1},t` CSV written by write_dataset_csv"""
    frame = pd.read_csv(path, float_precision="round_trip")
    columns = list(frame.columns)
    expected = [f"z_{k}" for k in range(len(columns) - 1)] + ["t"]
    if len(columns) < 2 or columns != expected:
        raise ShapeError(f"Dataset CSV columns must be {expected}, got {columns}")
    return Dataset(
        inputs=frame[expected[:-1]].to_numpy(dtype=float),
        targets=frame["t"].to_numpy(dtype=float),
        input_range=input_range,
    )
