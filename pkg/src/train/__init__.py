"""
Dataset generation, MSE training and the four-network replication suite
"""

from src.train.dataset import (
    Dataset,
    SeedPlan,
    generate_dataset,
    read_dataset_csv,
    write_dataset_csv,
)
from src.train.suite import (
    SUITE_NETWORKS,
    NetworkSpec,
    SuiteEntry,
    SuiteResult,
    replicate_reference_suite,
)
from src.train.trainer import (
    TrainConfig,
    TrainReport,
    cross_validate,
    fit,
    gradient_step,
    mse,
)

__all__ = [
    "SUITE_NETWORKS",
    "Dataset",
    "NetworkSpec",
    "SeedPlan",
    "SuiteEntry",
    "SuiteResult",
    "TrainConfig",
    "TrainReport",
    "cross_validate",
    "fit",
    "generate_dataset",
    "gradient_step",
    "mse",
    "read_dataset_csv",
    "replicate_reference_suite",
    "write_dataset_csv",
]
