"""Shared helpers: random-but-valid homogeneous models for property tests."""

import numpy as np
import pytest

from het3 import geometry


def random_model(rng: np.random.Generator) -> geometry.StructureConstants:
    """Draw a Jacobi-satisfying model: Milnor normal form or solvable family."""
    if rng.random() < 0.5:
        return geometry.milnor(*rng.normal(scale=1.5, size=3))
    return geometry.hyperbolic_model(rng.normal(scale=1.5))


def model_corpus() -> list[geometry.StructureConstants]:
    """Small fixed corpus spanning flat / nilpotent / solvable geometry."""
    return [
        geometry.abelian(),
        geometry.heisenberg(1.0),
        geometry.heisenberg(2.0),
        geometry.heisenberg(-0.7),
        geometry.hyperbolic_model(1.0),
        geometry.hyperbolic_model(0.3),
        geometry.milnor(1.0, 1.0, 1.0),
        geometry.milnor(1.0, -2.0, 0.5),
        geometry.milnor(0.0, 3.0, -1.0),
    ]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260823)
