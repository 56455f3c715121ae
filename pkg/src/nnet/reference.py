"""
Reference networks with known weights
"""

import numpy as np

from src.nnet.activations import Activation, ActivationKind
from src.nnet.model import MlpModel, from_weights

# Printed weights of the trained single-hidden-layer ReLU network; column j of W1 feeds hidden unit j
PUBLISHED_RELU_W1 = np.array([[0.6994, 0.4329], [0.7760, 0.8067]])
PUBLISHED_RELU_W2 = np.array([[0.8283], [-0.1796]])


def published_relu_model() -> MlpModel:
    return from_weights([PUBLISHED_RELU_W1, PUBLISHED_RELU_W2], "relu")


def exact_average_model(order: int = 2) -> MlpModel:
    """One hidden unit with unit-slope leaky activations computing the order-M moving average exactly"""
    linear = Activation(ActivationKind.LEAKY_RELU, alpha=1.0)
    return from_weights([np.full((order, 1), 1.0 / order), np.ones((1, 1))], linear)
