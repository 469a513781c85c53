"""Real and complex embedding vectors.

Both types are immutable: the arrays they hold are private copies flagged
read-only. Complex embeddings store magnitudes and phases separately, phases
canonicalized to (-pi, pi].
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from src.config.settings import Config
from src.utils.exceptions import BadDimension, InputError, NotNormalized, ZeroVector


def _frozen_vector(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise BadDimension(f"{name} must be a non-empty 1-D sequence, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


def canonicalize_phase(phases) -> np.ndarray:
    """Map phases to (-pi, pi]; values already in range are returned untouched."""
    phases = np.asarray(phases, dtype=np.float64)
    in_range = (phases > -np.pi) & (phases <= np.pi)
    wrapped = np.mod(phases + np.pi, 2 * np.pi) - np.pi
    wrapped = np.where(wrapped <= -np.pi, np.pi, wrapped)
    return np.where(in_range, phases, wrapped)


@dataclass(frozen=True, eq=False)
class RealEmbedding:
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_vector(self.values, "values"))

    @property
    def dim(self) -> int:
        return int(self.values.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def as_complex(self) -> "ComplexEmbedding":
        """Lift to a complex embedding: |e_i| with phase 0 (e_i >= 0) or pi (e_i < 0)."""
        return ComplexEmbedding(np.abs(self.values), np.where(self.values < 0, np.pi, 0.0))

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"RealEmbedding(dim={self.dim}, norm={self.norm:.6g})"


@dataclass(frozen=True, eq=False)
class ComplexEmbedding:
    magnitudes: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        magnitudes = _frozen_vector(self.magnitudes, "magnitudes")
        phases = _frozen_vector(self.phases, "phases")
        if magnitudes.size != phases.size:
            raise BadDimension(
                f"magnitudes and phases differ in length: {magnitudes.size} vs {phases.size}"
            )
        if np.any(magnitudes < 0):
            raise InputError("magnitudes must be non-negative")
        phases = canonicalize_phase(phases)
        phases.setflags(write=False)
        object.__setattr__(self, "magnitudes", magnitudes)
        object.__setattr__(self, "phases", phases)

    @property
    def dim(self) -> int:
        return int(self.magnitudes.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.magnitudes))

    @property
    def values(self) -> np.ndarray:
        return self.magnitudes * np.exp(1j * self.phases)

    def as_complex(self) -> "ComplexEmbedding":
        return self

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"ComplexEmbedding(dim={self.dim}, norm={self.norm:.6g})"


Embedding = Union[RealEmbedding, ComplexEmbedding]


def normalize(v: Embedding) -> Embedding:
    """Scale to unit L2 norm, keeping direction and phases."""
    norm = v.norm
    if norm == 0.0:
        raise ZeroVector(f"cannot normalize an all-zero {type(v).__name__}")
    if isinstance(v, ComplexEmbedding):
        return ComplexEmbedding(v.magnitudes / norm, v.phases)
    return RealEmbedding(v.values / norm)


def truncate(v: Embedding, k: int) -> Embedding:
    """Keep the first k components and renormalize (Matryoshka-style prefix)."""
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= v.dim:
        raise BadDimension(f"truncation length must be in [1, {v.dim}], got {k}")
    if isinstance(v, ComplexEmbedding):
        prefix = ComplexEmbedding(v.magnitudes[:k], v.phases[:k])
    else:
        prefix = RealEmbedding(v.values[:k])
    return normalize(prefix)


def is_unit(v: Embedding, tol: float = Config.UNIT_NORM_TOL) -> bool:
    return abs(v.norm - 1.0) <= tol


def require_unit(v: Embedding, name: str = "embedding"):
    if v.norm == 0.0:
        raise ZeroVector(f"{name} is the zero vector")
    if not is_unit(v):
        raise NotNormalized(f"{name} must be unit-normalized (norm = {v.norm:.15g})")
