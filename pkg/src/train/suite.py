"""
Four-network replication: three single-hidden-layer nets and one three-hidden-layer net
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import pandas as pd
from loguru import logger

from src.core.config.settings import settings
from src.core.constants import (
    DEFAULT_EPSILON,
    DEFAULT_INPUT_RANGE,
    DEFAULT_RESTARTS,
    DEFAULT_TEST_SIZE,
    DEFAULT_TRAIN_SIZE,
    NETWORK_SEED_STRIDE,
    REFINE_EPSILON,
    REFINE_STEPS,
)
from src.nnet.activations import Activation
from src.nnet.model import MlpModel, build
from src.nnet.serialization import model_to_dict
from src.signals.fir import FirFilter, moving_average
from src.train.dataset import Dataset, SeedPlan, generate_dataset
from src.train.trainer import TrainConfig, TrainReport, cross_validate, fit


@dataclass(frozen=True)
class NetworkSpec:
    """Architecture and optimizer preset of one suite network"""

    name: str
    widths: tuple[int, ...]
    activation: str
    learning_rate: float
    max_steps: int
    refine_epsilon: float | None = None
    refine_steps: int = 0


SUITE_NETWORKS = (
    NetworkSpec("sigmoid_2_2_1", (2, 2, 1), "sigmoid", learning_rate=2.0, max_steps=40_000),
    NetworkSpec(
        "relu_2_2_1", (2, 2, 1), "relu", learning_rate=0.5, max_steps=20_000,
        refine_epsilon=REFINE_EPSILON, refine_steps=REFINE_STEPS,
    ),
    NetworkSpec(
        "leaky_2_2_1", (2, 2, 1), "leaky_relu", learning_rate=0.5, max_steps=20_000,
        refine_epsilon=REFINE_EPSILON, refine_steps=REFINE_STEPS,
    ),
    NetworkSpec(
        "leaky_2_3_3_2_1", (2, 3, 3, 2, 1), "leaky_relu", learning_rate=0.2, max_steps=20_000,
        refine_epsilon=REFINE_EPSILON, refine_steps=REFINE_STEPS,
    ),
)


@dataclass
class SuiteEntry:
    spec: NetworkSpec
    model: MlpModel
    report: TrainReport

    def summary_row(self) -> dict:
        return {
            "model": self.spec.name,
            "activation": self.spec.activation,
            "L": self.model.hidden_layers,
            "widths": "-".join(map(str, self.model.widths)),
            "train_mse": self.report.final_train_mse,
            "test_mse": self.report.final_test_mse,
            "steps": self.report.steps_used,
            "converged": self.report.converged,
        }


@dataclass
class SuiteResult:
    seed: int
    entries: list[SuiteEntry] = field(default_factory=list)
    duration_s: float = 0.0

    def summary(self) -> pd.DataFrame:
        return pd.DataFrame([entry.summary_row() for entry in self.entries])

    def models(self) -> dict[str, dict]:
        return {entry.spec.name: model_to_dict(entry.model) for entry in self.entries}

    def entry(self, name: str) -> SuiteEntry:
        for candidate in self.entries:
            if candidate.spec.name == name:
                return candidate
        raise KeyError(name)


def _refine(spec: NetworkSpec, model: MlpModel, report: TrainReport, data: Dataset, seed: int) -> tuple[MlpModel, TrainReport]:
    """Keep descending a converged network toward the tighter tolerance of its preset"""
    config = TrainConfig(
        epsilon=spec.refine_epsilon,
        max_steps=spec.refine_steps,
        learning_rate=spec.learning_rate,
        seed=seed,
        restarts=0,
    )
    refined, extra = fit(model, data, config)
    if extra.final_train_mse > report.final_train_mse:
        logger.warning(f"{spec.name}: refinement raised train mse to {extra.final_train_mse:.3e}, keeping converged weights")
        return model, report
    logger.info(f"{spec.name}: refined to train mse {extra.final_train_mse:.3e} in {extra.steps_used} more steps")
    return refined, report.model_copy(
        update={
            "final_train_mse": extra.final_train_mse,
            "steps_used": report.steps_used + extra.steps_used,
            "loss_increases": report.loss_increases + extra.loss_increases,
        }
    )


def _train_network(
    index: int,
    spec: NetworkSpec,
    fir: FirFilter,
    data: Dataset,
    seeds: SeedPlan,
    epsilon: float,
    restarts: int,
    test_size: int,
) -> SuiteEntry:
    init_seed = seeds.init + NETWORK_SEED_STRIDE * index
    model = build(spec.widths, Activation(spec.activation), seed=init_seed)
    config = TrainConfig(
        epsilon=epsilon,
        max_steps=spec.max_steps,
        learning_rate=spec.learning_rate,
        seed=init_seed,
        restarts=restarts,
    )
    trained, report = fit(model, data, config)
    if report.converged and spec.refine_epsilon is not None and spec.refine_steps > 0:
        trained, report = _refine(spec, trained, report, data, init_seed)
    test_mse = cross_validate(trained, fir, test_size, data.input_range, seed=seeds.data)
    report = report.model_copy(update={"final_test_mse": test_mse})
    logger.info(
        f"{spec.name}: train mse {report.final_train_mse:.3e}, test mse {test_mse:.3e}, "
        f"converged={report.converged}"
    )
    return SuiteEntry(spec=spec, model=trained, report=report)


def replicate_reference_suite(
    seed: int,
    train_size: int = DEFAULT_TRAIN_SIZE,
    test_size: int = DEFAULT_TEST_SIZE,
    epsilon: float = DEFAULT_EPSILON,
    restarts: int = DEFAULT_RESTARTS,
    input_range: tuple[float, float] = DEFAULT_INPUT_RANGE,
    networks: tuple[NetworkSpec, ...] = SUITE_NETWORKS,
    threads: int | None = None,
) -> SuiteResult:
    """
    Train every suite network on the two-tap moving average

    Networks train in parallel threads (capped by FILTERLAB_THREADS); each
    fit is single-threaded and depends only on its own seeds, so results do
    not depend on scheduling.
    """
    started = time.perf_counter()
    seeds = SeedPlan.from_seed(seed)
    fir = moving_average(2)
    data = generate_dataset(fir, train_size, input_range, seed=seeds.data)
    workers = max(1, min(threads or settings.threads, len(networks)))
    logger.info(f"Training {len(networks)} networks on {train_size} windows with {workers} worker(s)")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_train_network, index, spec, fir, data, seeds, epsilon, restarts, test_size)
            for index, spec in enumerate(networks)
        ]
        entries = [future.result() for future in futures]

    result = SuiteResult(seed=seed, entries=entries, duration_s=time.perf_counter() - started)
    converged = sum(entry.report.converged for entry in entries)
    logger.info(f"Suite finished in {result.duration_s:.1f}s: {converged}/{len(entries)} converged")
    return result
