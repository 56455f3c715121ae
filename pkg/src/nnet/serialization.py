"""
JSON interchange format for trained models
"""

import json
from pathlib import Path
from typing import Any

from jsonschema import Draft7Validator
from jsonschema.exceptions import best_match
from loguru import logger

from src.core.exceptions import FilterLabError, ModelFormatError
from src.nnet.activations import Activation, ActivationKind
from src.nnet.model import Layer, MlpModel

MODEL_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["layers"],
    "properties": {
        "layers": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["weights", "activation"],
                "properties": {
                    "weights": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "array", "minItems": 1, "items": {"type": "number"}},
                    },
                    "activation": {"enum": [kind.value for kind in ActivationKind]},
                    "alpha": {"type": "number", "exclusiveMinimum": 0},
                },
            },
        }
    },
}

_validator = Draft7Validator(MODEL_SCHEMA)


def model_to_dict(model: MlpModel) -> dict[str, Any]:
    return {
        "layers": [
            {
                "weights": layer.weights.tolist(),
                "activation": layer.activation.kind.value,
                "alpha": layer.activation.alpha,
            }
            for layer in model.layers
        ]
    }


def _field_path(path) -> str:
    text = ""
    for part in path:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text or "<root>"


def model_from_dict(data: Any) -> MlpModel:
    """Validate a decoded JSON document and build the model"""
    error = best_match(_validator.iter_errors(data))
    if error is not None:
        path = list(error.absolute_path)
        if error.validator == "required":
            missing = [k for k in error.validator_value if k not in error.instance]
            path.append(missing[0])
            raise ModelFormatError(f"Missing required field '{missing[0]}'", field=_field_path(path))
        raise ModelFormatError(f"Invalid model document: {error.message}", field=_field_path(path))

    layers = []
    for index, entry in enumerate(data["layers"]):
        rows = entry["weights"]
        if len({len(row) for row in rows}) != 1:
            raise ModelFormatError("Weight rows have unequal lengths", field=f"layers[{index}].weights")
        try:
            activation = Activation(entry["activation"], entry.get("alpha", Activation.alpha))
            layers.append(Layer(rows, activation))
        except FilterLabError as e:
            raise ModelFormatError(str(e), field=f"layers[{index}]") from e
    try:
        return MlpModel(tuple(layers))
    except FilterLabError as e:
        raise ModelFormatError(f"Layer shapes do not chain: {e}", field="layers") from e


def dumps_model(model: MlpModel) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def loads_model(text: str) -> MlpModel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"Malformed model JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    return model_from_dict(data)


def save_model(model: MlpModel, path: str | Path) -> Path:
    """Write a model as JSON"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_model(model), encoding="utf-8")
    logger.info(f"Model saved: {path} ({model.describe()})")
    return path


def load_model(path: str | Path) -> MlpModel:
    """Read and validate a model JSON file"""
    path = Path(path)
    model = loads_model(path.read_text(encoding="utf-8"))
    logger.debug(f"Model loaded: {path} ({model.describe()})")
    return model
