"""Seeded synthetic embedding pairs with a prescribed cosine similarity.

a is a normalized Gaussian vector; b = s a + sqrt(1 - s^2) w, with w a second
Gaussian vector made orthogonal to a and normalized. Both come from one
default_rng(seed).standard_normal(2 * dim) draw: a takes the first half, w the second.
"""
import math
from typing import Tuple

import numpy as np

from src.config.settings import Config
from src.embedding.vectors import RealEmbedding
from src.utils.exceptions import BadDimension, ConfigError


def generate_pair(dim: int = Config.SYNTHETIC_DIM, similarity: float = Config.SYNTHETIC_SIMILARITY,
                  seed: int = Config.SYNTHETIC_SEED) -> Tuple[RealEmbedding, RealEmbedding]:
    if dim < 2:
        raise BadDimension(f"a synthetic pair needs dim >= 2, got {dim}")
    if not -1.0 <= similarity <= 1.0:
        raise ConfigError(f"similarity must be in [-1, 1], got {similarity}")

    normals = np.random.default_rng(seed).standard_normal(2 * dim)
    a = normals[:dim] / np.linalg.norm(normals[:dim])

    g = normals[dim:]
    w = g - float(np.dot(g, a)) * a
    w = w / np.linalg.norm(w)

    b = similarity * a + math.sqrt(1.0 - similarity ** 2) * w
    return RealEmbedding(a), RealEmbedding(b)
