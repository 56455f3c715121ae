"""
Linear-region extraction for piecewise-linear networks

Within one activation pattern a bias-free ReLU/leaky network is an exact
linear map; its coefficient vector reads directly as FIR taps.
"""

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from loguru import logger

from src.core.constants import BOUNDARY_NUDGE, DEFAULT_REGION_GRID_DENSITY
from src.core.exceptions import (
    InvalidParameterError,
    ShapeError,
    UnsupportedActivationError,
)
from src.nnet.model import MlpModel, trace
from src.signals.fir import FirFilter


@dataclass(frozen=True)
class Box:
    """Axis-aligned evaluation domain"""

    lows: tuple[float, ...]
    highs: tuple[float, ...]

    def __post_init__(self):
        lows = tuple(float(v) for v in self.lows)
        highs = tuple(float(v) for v in self.highs)
        if not lows or len(lows) != len(highs):
            raise InvalidParameterError("Box bounds must be non-empty and of equal length")
        for lo, hi in zip(lows, highs):
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
                raise InvalidParameterError(f"Box bound [{lo}, {hi}] must satisfy lo < hi")
        object.__setattr__(self, "lows", lows)
        object.__setattr__(self, "highs", highs)

    @classmethod
    def cube(cls, dim: int, lo: float = 0.0, hi: float = 1.0) -> "Box":
        return cls((lo,) * dim, (hi,) * dim)

    @property
    def dim(self) -> int:
        return len(self.lows)

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (np.array(self.lows) + np.array(self.highs))

    def grid(self, density: int) -> np.ndarray:
        """All density^dim lattice points, one per row"""
        if density < 2:
            raise InvalidParameterError(f"Grid density must be >= 2 per axis, got {density}")
        axes = [np.linspace(lo, hi, density) for lo, hi in zip(self.lows, self.highs)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=1)


@dataclass(frozen=True)
class ActivationPattern:
    """Branch of every switching unit in layer order (True = unit-slope branch)"""

    states: tuple[bool, ...]

    def __str__(self) -> str:
        return "".join("1" if s else "0" for s in self.states)


@dataclass(frozen=True, eq=False)
class LinearRegion:
    pattern: ActivationPattern
    taps: np.ndarray
    sample_count: int

    def to_dict(self, tap_error: float | None = None) -> dict:
        return {
            "pattern": str(self.pattern),
            "taps": self.taps.tolist(),
            "sample_count": self.sample_count,
            "tap_error": tap_error,
        }


@dataclass(frozen=True)
class RegionFidelity:
    errors: tuple[float, ...]
    weighted_error: float

    @property
    def worst_error(self) -> float:
        return max(self.errors)


def _require_piecewise_linear(model: MlpModel):
    for index, act in enumerate(model.activations):
        if not act.piecewise_linear:
            raise UnsupportedActivationError(f"Layer {index} uses {act.kind.value}; regions need relu, leaky_relu or identity")


def _switching_pre_activations(model: MlpModel, points: np.ndarray) -> list[np.ndarray]:
    recorded = trace(model, points)
    return [z for z, act in zip(recorded.pre_activations, model.activations) if act.has_branches]


def activation_states(model: MlpModel, points: np.ndarray, interior: np.ndarray | None = None) -> np.ndarray:
    """
    Boolean (N, units) matrix; a unit is on its unit-slope branch when its pre-activation is >= 0

    Args:
        model: relu, leaky_relu or identity network
        points: (N, input_dim) inputs
        interior: point inside the domain; a zero pre-activation takes its branch from the input
            moved a tiny step toward it, so a corner where every unit vanishes is not reported as
            a pattern of its own
    """
    _require_piecewise_linear(model)
    points = np.asarray(points, dtype=float)
    pre = _switching_pre_activations(model, points)
    if not pre:
        return np.zeros((points.shape[0], 0), dtype=bool)
    if interior is not None and any(np.any(z == 0.0) for z in pre):
        nudged = points + BOUNDARY_NUDGE * (np.asarray(interior, dtype=float) - points)
        pre = [np.where(z == 0.0, zn, z) for z, zn in zip(pre, _switching_pre_activations(model, nudged))]
    return np.concatenate([z >= 0.0 for z in pre], axis=1)


def effective_taps(model: MlpModel, pattern: ActivationPattern) -> np.ndarray:
    """Compose the weight matrices with the per-unit slopes of one pattern"""
    _require_piecewise_linear(model)
    states = np.asarray(pattern.states, dtype=bool)
    switching = sum(layer.fan_out for layer in model.layers if layer.activation.has_branches)
    if states.size != switching:
        raise ShapeError(f"Pattern has {states.size} states but the model has {switching} switching units")
    composed = np.eye(model.input_dim)
    cursor = 0
    for layer in model.layers:
        composed = composed @ layer.weights
        if layer.activation.has_branches:
            branch = states[cursor : cursor + layer.fan_out]
            cursor += layer.fan_out
            composed = composed * layer.activation.branch_slope(branch)[np.newaxis, :]
    return composed[:, 0] if composed.shape[1] == 1 else composed


def enumerate_regions(
    model: MlpModel,
    domain: Box,
    grid_density: int = DEFAULT_REGION_GRID_DENSITY,
) -> list[LinearRegion]:
    """
    Sample the domain on a lattice and collect every activation pattern seen

    Regions thinner than the lattice pitch can be missed.

    Returns:
        Regions sorted by sample_count, largest first
    """
    _require_piecewise_linear(model)
    if domain.dim != model.input_dim:
        raise ShapeError(f"Domain has {domain.dim} axes but the model takes {model.input_dim} inputs")
    if model.output_dim != 1:
        raise ShapeError(f"Region taps need a single-output model, got {model.output_dim} outputs")

    points = domain.grid(grid_density)
    states = activation_states(model, points, interior=domain.center)
    if states.shape[1] == 0:
        patterns, counts = np.zeros((1, 0), dtype=bool), np.array([points.shape[0]])
    else:
        patterns, counts = np.unique(states, axis=0, return_counts=True)

    regions = []
    for row, count in zip(patterns, counts):
        pattern = ActivationPattern(tuple(bool(s) for s in row))
        regions.append(LinearRegion(pattern, effective_taps(model, pattern), int(count)))
    regions.sort(key=lambda r: (-r.sample_count, str(r.pattern)))
    logger.info(f"{model.describe()}: {len(regions)} region(s) on a {grid_density}-point lattice")
    return regions


def region_fidelity(regions: list[LinearRegion], reference: FirFilter) -> RegionFidelity:
    """Max-abs tap error per region against a reference filter, plus the sample-weighted mean"""
    if not regions:
        raise InvalidParameterError("No regions to compare")
    expected = reference.taps
    errors = []
    for region in regions:
        if region.taps.shape != expected.shape:
            raise ShapeError(f"Region taps {region.taps.shape} do not match filter order {reference.order}")
        errors.append(float(np.max(np.abs(region.taps - expected))))
    weights = np.array([r.sample_count for r in regions], dtype=float)
    return RegionFidelity(tuple(errors), float(np.dot(weights, errors) / weights.sum()))


def write_regions_json(regions: list[LinearRegion], path: str | Path, reference: FirFilter | None = None) -> Path:
    """Region list as JSON, largest first, with per-region tap error when a reference filter is given"""
    errors = region_fidelity(regions, reference).errors if reference is not None else [None] * len(regions)
    path = Path(path)
    path.write_text(json.dumps([r.to_dict(err) for r, err in zip(regions, errors)], indent=2) + "\n")
    logger.debug(f"Wrote {len(regions)} region(s) to {path}")
    return path
