"""Shared pytest fixtures: the dog/cat pair, the synthetic 128-dim pair, isolated logs."""
import logging
import math

import numpy as np
import pytest

from src.config.settings import Config
from src.embedding.io import load_embedding
from src.embedding.vectors import ComplexEmbedding, RealEmbedding

DOG = ComplexEmbedding([0.4, math.sqrt(1 - 0.4 ** 2)], [math.pi / 6, math.pi / 2])
CAT = ComplexEmbedding([0.5, math.sqrt(1 - 0.5 ** 2)], [math.pi / 4, math.pi / 3])


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    monkeypatch.setattr(Config, "LOGS_DIR", tmp_path / "logs")
    yield
    for name in ("qcosine", "qcosine.errors", "qcosine.performance"):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            handler.close()
            logger.removeHandler(handler)
        logger.propagate = True


@pytest.fixture
def dog():
    return DOG


@pytest.fixture
def cat():
    return CAT


@pytest.fixture
def fixtures_dir():
    return Config.FIXTURES_DIR


@pytest.fixture
def synthetic_pair():
    a = load_embedding(Config.FIXTURES_DIR / "synthetic_128_a.json")
    b = load_embedding(Config.FIXTURES_DIR / "synthetic_128_b.json")
    return a, b


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_complex_unit(rng: np.random.Generator, dim: int) -> ComplexEmbedding:
    magnitudes = np.abs(rng.normal(size=dim))
    magnitudes /= np.linalg.norm(magnitudes)
    return ComplexEmbedding(magnitudes, rng.uniform(-np.pi, np.pi, size=dim))


def random_real_unit(rng: np.random.Generator, dim: int) -> RealEmbedding:
    values = rng.normal(size=dim)
    return RealEmbedding(values / np.linalg.norm(values))
