"""
Elementwise activation functions with exact derivatives
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.core.constants import DEFAULT_LEAKY_ALPHA
from src.core.exceptions import InvalidParameterError


class ActivationKind(str, Enum):
    """Supported activation functions"""

    SIGMOID = "sigmoid"
    RELU = "relu"
    LEAKY_RELU = "leaky_relu"
    IDENTITY = "identity"


@dataclass(frozen=True)
class Activation:
    """Activation f_a; alpha is the negative-side slope of leaky_relu"""

    kind: ActivationKind
    alpha: float = DEFAULT_LEAKY_ALPHA

    def __post_init__(self):
        try:
            kind = ActivationKind(self.kind)
        except ValueError:
            choices = ", ".join(k.value for k in ActivationKind)
            raise InvalidParameterError(f"Unknown activation '{self.kind}', expected one of: {choices}")
        object.__setattr__(self, "kind", kind)
        alpha = float(self.alpha)
        if kind is ActivationKind.LEAKY_RELU and not (math.isfinite(alpha) and alpha > 0.0):
            raise InvalidParameterError(f"leaky_relu slope must be positive, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, z: np.ndarray) -> np.ndarray:
        if self.kind is ActivationKind.SIGMOID:
            return 0.5 * (1.0 + np.tanh(0.5 * z))
        if self.kind is ActivationKind.RELU:
            return np.maximum(z, 0.0)
        if self.kind is ActivationKind.LEAKY_RELU:
            return np.where(z >= 0.0, z, self.alpha * z)
        return np.asarray(z, dtype=float).copy()

    def derivative(self, z: np.ndarray) -> np.ndarray:
        """f_a'(z); relu'(0) is taken as 0"""
        if self.kind is ActivationKind.SIGMOID:
            s = self(z)
            return s * (1.0 - s)
        if self.kind is ActivationKind.RELU:
            return np.where(z > 0.0, 1.0, 0.0)
        if self.kind is ActivationKind.LEAKY_RELU:
            return np.where(z >= 0.0, 1.0, self.alpha)
        return np.ones_like(z, dtype=float)

    @property
    def piecewise_linear(self) -> bool:
        return self.kind is not ActivationKind.SIGMOID

    @property
    def has_branches(self) -> bool:
        """True when the unit switches between two linear pieces"""
        return self.kind in (ActivationKind.RELU, ActivationKind.LEAKY_RELU)

    def branch_slope(self, upper: np.ndarray) -> np.ndarray:
        """Slope of each unit given its branch (True = pre-activation >= 0)"""
        upper = np.asarray(upper, dtype=bool)
        if self.kind is ActivationKind.RELU:
            return np.where(upper, 1.0, 0.0)
        if self.kind is ActivationKind.LEAKY_RELU:
            return np.where(upper, 1.0, self.alpha)
        if self.kind is ActivationKind.IDENTITY:
            return np.ones(upper.shape, dtype=float)
        raise InvalidParameterError("sigmoid has no linear branches")

    def describe(self) -> str:
        if self.kind is ActivationKind.LEAKY_RELU:
            return f"{self.kind.value}(alpha={self.alpha:g})"
        return self.kind.value


def as_activation(value: "Activation | ActivationKind | str") -> Activation:
    return value if isinstance(value, Activation) else Activation(value)
