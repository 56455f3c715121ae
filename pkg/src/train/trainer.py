"""
MSE training by full-batch gradient descent with random restarts
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.core.constants import (
    DEFAULT_EPSILON,
    DEFAULT_INPUT_RANGE,
    DEFAULT_LEARNING_RATE,
    DEFAULT_MAX_STEPS,
    DEFAULT_RESTARTS,
    DEFAULT_TEST_SIZE,
    RESTART_SEED_STRIDE,
    TEST_SEED_OFFSET,
)
from src.core.exceptions import ShapeError
from src.nnet.activations import ActivationKind
from src.nnet.model import MlpModel, backpropagate, build, predict, propagate
from src.signals.fir import FirFilter
from src.train.dataset import Dataset, generate_dataset


class TrainConfig(BaseModel):
    """Training hyper-parameters"""

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(default=DEFAULT_EPSILON, gt=0)
    max_steps: int = Field(default=DEFAULT_MAX_STEPS, ge=1)
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, gt=0)
    batch_size: int | None = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0)
    restarts: int = Field(default=DEFAULT_RESTARTS, ge=0)


class TrainReport(BaseModel):
    """Outcome of one fit; converged is True exactly when final_train_mse <= epsilon"""

    final_train_mse: float
    final_test_mse: float | None = None
    steps_used: int
    restarts_used: int
    converged: bool
    loss_increases: int = 0


@dataclass
class _Attempt:
    weights: list[np.ndarray]
    loss: float
    steps: int
    increases: int = 0


def mse(predictions: Sequence[float] | np.ndarray, targets: Sequence[float] | np.ndarray) -> float:
    """(1/T) sum_i ||t_i - y_i||^2"""
    y = np.asarray(predictions, dtype=float)
    t = np.asarray(targets, dtype=float)
    if y.shape != t.shape or y.size == 0:
        raise ShapeError(f"Predictions {y.shape} and targets {t.shape} must have equal non-empty shapes")
    diff = (t - y).reshape(t.shape[0], -1)
    return float(np.mean(np.sum(diff * diff, axis=1)))


def _check_fit_dims(model: MlpModel, data: Dataset):
    if model.input_dim != data.order:
        raise ShapeError(f"Model expects {model.input_dim} inputs but the dataset has order {data.order}")
    if model.output_dim != 1:
        raise ShapeError(f"Model must have a single output, got {model.output_dim}")


def _loss_and_grads(weights, activations, inputs, targets) -> tuple[float, list[np.ndarray]]:
    recorded = propagate(weights, activations, inputs)
    residual = recorded.outputs - targets
    loss = float(np.mean(np.sum(residual * residual, axis=1)))
    upstream = (2.0 / inputs.shape[0]) * residual
    return loss, backpropagate(weights, activations, recorded, upstream)


def gradient_step(model: MlpModel, data: Dataset, learning_rate: float) -> tuple[MlpModel, float]:
    """
    One full-batch gradient-descent step

    Returns:
        (updated model, training loss before the step)
    """
    _check_fit_dims(model, data)
    loss, grads = _loss_and_grads(model.weights, model.activations, data.inputs, data.target_matrix)
    return model.with_weights([w - learning_rate * g for w, g in zip(model.weights, grads)]), loss


def _descend(model: MlpModel, data: Dataset, config: TrainConfig) -> _Attempt:
    weights = [w.copy() for w in model.weights]
    activations = model.activations
    inputs, targets = data.inputs, data.target_matrix
    batch = config.batch_size if config.batch_size and config.batch_size < data.size else None
    offset = 0
    kinked = any(act.kind is ActivationKind.RELU for act in activations)

    step = increases = 0
    previous = math.inf
    while True:
        if batch is None:
            loss, grads = _loss_and_grads(weights, activations, inputs, targets)
        else:
            loss = mse(propagate(weights, activations, inputs).outputs, targets)
        if not math.isfinite(loss):
            logger.warning(f"Loss became non-finite after {step} steps, abandoning attempt")
            return _Attempt(weights, math.inf, step, increases)
        if loss > previous:
            increases += 1
            if increases == 1:
                cause = "at a ReLU kink" if kinked else f"learning rate {config.learning_rate:g}"
                logger.warning(f"Loss rose from {previous:.3e} to {loss:.3e} at step {step} ({cause})")
        previous = loss
        if loss <= config.epsilon or step >= config.max_steps:
            if increases > 1:
                logger.warning(f"Loss rose on {increases} of {step} steps")
            return _Attempt(weights, loss, step, increases)
        if batch is not None:
            rows = np.arange(offset, offset + batch) % data.size
            offset = (offset + batch) % data.size
            _, grads = _loss_and_grads(weights, activations, inputs[rows], targets[rows])
        for w, g in zip(weights, grads):
            w -= config.learning_rate * g
        step += 1
        if step % 10_000 == 0:
            logger.debug(f"step {step}: train mse {loss:.3e}")


def fit(model: MlpModel, data: Dataset, config: TrainConfig | None = None) -> tuple[MlpModel, TrainReport]:
    """
    Minimize the training MSE until it reaches epsilon or the step budget runs out

    A stalled attempt is retried from a fresh initialization of the same
    architecture, up to `config.restarts` times. The best attempt is returned;
    running out of attempts is reported, not raised.
    """
    config = config or TrainConfig()
    _check_fit_dims(model, data)

    best: _Attempt | None = None
    restarts_used = 0
    for attempt in range(config.restarts + 1):
        if attempt == 0:
            candidate = model
        else:
            candidate = build(model.widths, model.activations, seed=config.seed + RESTART_SEED_STRIDE * attempt)
            restarts_used = attempt
        result = _descend(candidate, data, config)
        logger.info(
            f"{model.describe()} attempt {attempt}: train mse {result.loss:.3e} after {result.steps} steps"
        )
        if best is None or result.loss < best.loss:
            best = result
        if result.loss <= config.epsilon:
            break
    else:
        logger.warning(f"{model.describe()} did not reach epsilon={config.epsilon:g} in {config.restarts + 1} attempts")

    trained = model.with_weights(best.weights) if math.isfinite(best.loss) else model
    final = mse(predict(trained, data.inputs), data.target_matrix)
    report = TrainReport(
        final_train_mse=final,
        steps_used=best.steps,
        restarts_used=restarts_used,
        converged=final <= config.epsilon,
        loss_increases=best.increases,
    )
    return trained, report


def cross_validate(
    model: MlpModel,
    fir: FirFilter,
    test_size: int = DEFAULT_TEST_SIZE,
    input_range: tuple[float, float] = DEFAULT_INPUT_RANGE,
    seed: int = 0,
) -> float:
    """MSE on a fresh dataset drawn with the training seed shifted by TEST_SEED_OFFSET"""
    test = generate_dataset(fir, test_size, input_range, seed=seed + TEST_SEED_OFFSET)
    if model.input_dim != fir.order:
        raise ShapeError(f"Model expects {model.input_dim} inputs but the filter has order {fir.order}")
    return mse(predict(model, test.inputs), test.target_matrix)
