"""
Functional-equivalence audit between networks of possibly different shape
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import pandas as pd

from src.core.constants import DEFAULT_AUDIT_GRID_DENSITY, EQUIVALENCE_THRESHOLD
from src.core.exceptions import ShapeError
from src.nnet.model import MlpModel, predict
from src.probe.regions import Box


@dataclass(frozen=True)
class AuditResult:
    sup_output_diff: float
    weight_distance: float | None

    @property
    def comparable(self) -> bool:
        return self.weight_distance is not None

    @property
    def equivalent(self) -> bool:
        return self.sup_output_diff <= EQUIVALENCE_THRESHOLD

    def to_dict(self) -> dict:
        return {
            "sup_output_diff": self.sup_output_diff,
            "weight_distance": self.weight_distance if self.comparable else "not-comparable",
            "equivalent": self.equivalent,
        }


def weight_distance(model_a: MlpModel, model_b: MlpModel) -> float | None:
    """||a - b|| over the mean of ||a|| and ||b||; None when layer shapes differ"""
    if [w.shape for w in model_a.weights] != [w.shape for w in model_b.weights]:
        return None
    a, b = model_a.flat_weights(), model_b.flat_weights()
    scale = 0.5 * (float(np.linalg.norm(a)) + float(np.linalg.norm(b)))
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(a - b)) / scale


def equivalence_audit(
    model_a: MlpModel,
    model_b: MlpModel,
    domain: Box,
    grid_density: int = DEFAULT_AUDIT_GRID_DENSITY,
) -> AuditResult:
    """Largest output disagreement on a lattice plus the parameter-space distance"""
    if model_a.input_dim != model_b.input_dim or model_a.output_dim != model_b.output_dim:
        raise ShapeError(
            f"Models disagree on dimensions: {model_a.input_dim}->{model_a.output_dim} "
            f"vs {model_b.input_dim}->{model_b.output_dim}"
        )
    if domain.dim != model_a.input_dim:
        raise ShapeError(f"Domain has {domain.dim} axes but the models take {model_a.input_dim} inputs")
    points = domain.grid(grid_density)
    diff = np.abs(predict(model_a, points) - predict(model_b, points))
    return AuditResult(sup_output_diff=float(np.max(diff)), weight_distance=weight_distance(model_a, model_b))


def audit_pairs(
    models: dict[str, MlpModel],
    domain: Box,
    grid_density: int = DEFAULT_AUDIT_GRID_DENSITY,
) -> pd.DataFrame:
    """Audit every unordered pair of named models"""
    rows = []
    for (name_a, a), (name_b, b) in combinations(models.items(), 2):
        result = equivalence_audit(a, b, domain, grid_density)
        rows.append({"model_a": name_a, "model_b": name_b, **result.to_dict()})
    return pd.DataFrame(rows, columns=["model_a", "model_b", "sup_output_diff", "weight_distance", "equivalent"])
