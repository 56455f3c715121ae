"""
Bias-free feed-forward networks: construction, forward pass and backpropagation
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import InvalidInputError, InvalidParameterError, ShapeError
from src.nnet.activations import Activation, ActivationKind, as_activation


@dataclass(frozen=True, eq=False)
class Layer:
    """Weight matrix of shape (fan_in, fan_out) followed by an activation"""

    weights: np.ndarray
    activation: Activation

    def __post_init__(self):
        weights = np.array(self.weights, dtype=float)
        if weights.ndim != 2 or 0 in weights.shape:
            raise ShapeError(f"Layer weights must be a non-empty 2-D matrix, got shape {weights.shape}")
        if not np.all(np.isfinite(weights)):
            raise InvalidParameterError("Layer weights must be finite")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "activation", as_activation(self.activation))

    @property
    def fan_in(self) -> int:
        return self.weights.shape[0]

    @property
    def fan_out(self) -> int:
        return self.weights.shape[1]


@dataclass(frozen=True, eq=False)
class MlpModel:
    """
    y = f_a(W_{L+1} f_a(W_L ... f_a(W_1 x)))

    Immutable; training produces new instances.
    """

    layers: tuple[Layer, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise InvalidParameterError("A model needs at least one layer")
        for index in range(1, len(layers)):
            if layers[index - 1].fan_out != layers[index].fan_in:
                raise ShapeError(
                    f"Layer {index} expects {layers[index].fan_in} inputs "
                    f"but layer {index - 1} produces {layers[index - 1].fan_out}"
                )
        object.__setattr__(self, "layers", layers)

    @property
    def input_dim(self) -> int:
        return self.layers[0].fan_in

    @property
    def output_dim(self) -> int:
        return self.layers[-1].fan_out

    @property
    def hidden_layers(self) -> int:
        return len(self.layers) - 1

    @property
    def widths(self) -> tuple[int, ...]:
        return (self.input_dim,) + tuple(layer.fan_out for layer in self.layers)

    @property
    def weights(self) -> tuple[np.ndarray, ...]:
        return tuple(layer.weights for layer in self.layers)

    @property
    def activations(self) -> tuple[Activation, ...]:
        return tuple(layer.activation for layer in self.layers)

    @property
    def parameter_count(self) -> int:
        return sum(layer.weights.size for layer in self.layers)

    @property
    def is_piecewise_linear(self) -> bool:
        return all(act.piecewise_linear for act in self.activations)

    def flat_weights(self) -> np.ndarray:
        return np.concatenate([w.ravel() for w in self.weights])

    def with_weights(self, weights: Sequence[np.ndarray]) -> "MlpModel":
        if len(weights) != len(self.layers):
            raise ShapeError(f"Expected {len(self.layers)} weight matrices, got {len(weights)}")
        return MlpModel(tuple(Layer(w, layer.activation) for w, layer in zip(weights, self.layers)))

    def describe(self) -> str:
        kinds = sorted({act.describe() for act in self.activations})
        return f"{'-'.join(map(str, self.widths))} [{', '.join(kinds)}]"


@dataclass(frozen=True)
class ForwardTrace:
    """Per-layer inputs and pre-activations recorded during a batch forward pass"""

    layer_inputs: tuple[np.ndarray, ...]
    pre_activations: tuple[np.ndarray, ...]
    outputs: np.ndarray


def from_weights(
    weights: Sequence[Sequence[Sequence[float]] | np.ndarray],
    activations: "Activation | str | Sequence[Activation | str]",
) -> MlpModel:
    """Assemble a model from explicit weight matrices"""
    if len(weights) == 0:
        raise InvalidParameterError("A model needs at least one weight matrix")
    acts = _expand_activations(activations, len(weights))
    return MlpModel(tuple(Layer(np.asarray(w, dtype=float), act) for w, act in zip(weights, acts)))


def build(
    widths: Sequence[int],
    activations: "Activation | str | Sequence[Activation | str]",
    seed: int | Sequence[int] | None = None,
) -> MlpModel:
    """
    Build a model with fan-based uniform initialization

    Args:
        widths: layer widths from input to output, e.g. [2, 2, 1]
        activations: one activation for every layer, or one per weight matrix
        seed: RNG seed; equal seeds give equal weights

    Returns:
        MlpModel with len(widths) - 1 weight matrices
    """
    widths = [int(w) for w in widths]
    if len(widths) < 2:
        raise InvalidParameterError(f"Architecture needs an input and an output width, got {widths}")
    if any(w < 1 for w in widths):
        raise InvalidParameterError(f"Layer widths must be >= 1, got {widths}")
    acts = _expand_activations(activations, len(widths) - 1)
    rng = np.random.default_rng(seed)
    layers = []
    for fan_in, fan_out, act in zip(widths[:-1], widths[1:], acts):
        limit = math.sqrt(6.0 / (fan_in + fan_out))
        layers.append(Layer(rng.uniform(-limit, limit, size=(fan_in, fan_out)), act))
    return MlpModel(tuple(layers))


def _expand_activations(activations, count: int) -> list[Activation]:
    if isinstance(activations, (Activation, ActivationKind, str)):
        return [as_activation(activations)] * count
    acts = [as_activation(a) for a in activations]
    if len(acts) != count:
        raise InvalidParameterError(f"Expected {count} activations, got {len(acts)}")
    return acts


def _check_batch(model: MlpModel, inputs: np.ndarray | Sequence) -> np.ndarray:
    x = np.asarray(inputs, dtype=float)
    if x.ndim != 2 or x.shape[1] != model.input_dim:
        raise ShapeError(f"Expected inputs of shape (T, {model.input_dim}), got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("Inputs must be finite")
    return x


def propagate(
    weights: Sequence[np.ndarray],
    activations: Sequence[Activation],
    inputs: np.ndarray,
) -> ForwardTrace:
    """Unchecked batch forward pass over raw weight matrices"""
    h = inputs
    layer_inputs, pre = [], []
    for w, act in zip(weights, activations):
        layer_inputs.append(h)
        z = h @ w
        pre.append(z)
        h = act(z)
    return ForwardTrace(tuple(layer_inputs), tuple(pre), h)


def backpropagate(
    weights: Sequence[np.ndarray],
    activations: Sequence[Activation],
    recorded: ForwardTrace,
    upstream: np.ndarray,
) -> list[np.ndarray]:
    """Unchecked reverse-mode pass; gradient l has the shape of weights[l]"""
    grads: list[np.ndarray] = [np.empty(0)] * len(weights)
    delta = upstream * activations[-1].derivative(recorded.pre_activations[-1])
    for index in range(len(weights) - 1, -1, -1):
        grads[index] = recorded.layer_inputs[index].T @ delta
        if index > 0:
            delta = (delta @ weights[index].T) * activations[index - 1].derivative(recorded.pre_activations[index - 1])
    return grads


def trace(model: MlpModel, inputs: np.ndarray) -> ForwardTrace:
    """Batch forward pass that keeps what backpropagation needs"""
    return propagate(model.weights, model.activations, _check_batch(model, inputs))


def predict(model: MlpModel, inputs: np.ndarray) -> np.ndarray:
    """Forward pass over a (T, p) batch, returns (T, q)"""
    return trace(model, inputs).outputs


def forward(model: MlpModel, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Forward pass for a single input vector of length p"""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != model.input_dim:
        raise ShapeError(f"Expected an input vector of length {model.input_dim}, got shape {x.shape}")
    return predict(model, x[np.newaxis, :])[0]


def backward(model: MlpModel, recorded: ForwardTrace, upstream: np.ndarray) -> list[np.ndarray]:
    """Reverse-mode accumulation of d(sum upstream * output)/dW_l over a batch"""
    upstream = np.asarray(upstream, dtype=float)
    if upstream.shape != recorded.outputs.shape:
        raise ShapeError(f"Upstream shape {upstream.shape} does not match output shape {recorded.outputs.shape}")
    return backpropagate(model.weights, model.activations, recorded, upstream)


def gradient(
    model: MlpModel,
    x: Sequence[float] | np.ndarray,
    upstream: Sequence[float] | np.ndarray,
) -> list[np.ndarray]:
    """
    Per-layer gradients of upstream . forward(model, x)

    Returns:
        One array per layer, each with the shape of that layer's weights
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != model.input_dim:
        raise ShapeError(f"Expected an input vector of length {model.input_dim}, got shape {x.shape}")
    up = np.asarray(upstream, dtype=float)
    if up.shape != (model.output_dim,):
        raise ShapeError(f"Expected upstream of length {model.output_dim}, got shape {up.shape}")
    recorded = trace(model, x[np.newaxis, :])
    return backward(model, recorded, up[np.newaxis, :])
