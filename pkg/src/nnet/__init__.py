"""
Bias-free feed-forward networks
"""

from src.nnet.activations import Activation, ActivationKind
from src.nnet.model import (
    ForwardTrace,
    Layer,
    MlpModel,
    backward,
    build,
    forward,
    from_weights,
    gradient,
    predict,
    trace,
)
from src.nnet.reference import exact_average_model, published_relu_model
from src.nnet.serialization import (
    dumps_model,
    load_model,
    loads_model,
    model_from_dict,
    model_to_dict,
    save_model,
)

__all__ = [
    "Activation",
    "ActivationKind",
    "ForwardTrace",
    "Layer",
    "MlpModel",
    "backward",
    "build",
    "dumps_model",
    "exact_average_model",
    "forward",
    "from_weights",
    "gradient",
    "load_model",
    "loads_model",
    "model_from_dict",
    "model_to_dict",
    "published_relu_model",
    "predict",
    "save_model",
    "trace",
]
