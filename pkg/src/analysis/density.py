"""Density-matrix view of the similarity estimate.

rho_c = diag(c_i^2 / 2). It has unit trace when both embeddings are unit
vectors, and S_C = rho_c P_c - i rho_c P_s where P_c, P_s hold 2 P0 - 1 for
the Cos and Sin qubits. rho_c is diagonal, so only the diagonal is stored.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.embedding.encoding import encode_pair
from src.embedding.vectors import Embedding
from src.qsim.estimates import ProbEstimate
from src.utils.exceptions import DimensionMismatch, InputError


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    diagonal: np.ndarray

    def __post_init__(self):
        diagonal = np.array(self.diagonal, dtype=np.float64)
        if diagonal.ndim != 1:
            raise InputError("density matrix diagonal must be 1-D")
        if np.any(diagonal < 0):
            raise InputError("density matrix entries must be non-negative")
        diagonal.setflags(write=False)
        object.__setattr__(self, "diagonal", diagonal)

    @property
    def dim(self) -> int:
        return int(self.diagonal.size)

    @property
    def trace(self) -> float:
        return float(self.diagonal.sum())

    @property
    def spectrum(self) -> List[Tuple[float, int]]:
        return spectrum(self)


def density_matrix(a: Embedding, b: Embedding) -> DensityMatrix:
    dims = encode_pair(a, b)
    return DensityMatrix(np.array([d.c_squared / 2.0 for d in dims]))


def spectrum(rho: DensityMatrix) -> List[Tuple[float, int]]:
    """Eigenvalues in descending order with their dimension index (eigenvectors are basis axes)."""
    order = np.argsort(-rho.diagonal, kind="stable")
    return [(float(rho.diagonal[i]), int(i)) for i in order]


def _signals(probs: Sequence[Optional[ProbEstimate]]) -> np.ndarray:
    return np.array([p.signal if p is not None else 0.0 for p in probs])


def expectation(rho: DensityMatrix, probs_cos: Sequence[Optional[ProbEstimate]],
                probs_sin: Sequence[Optional[ProbEstimate]]) -> complex:
    """Tr(rho_c S_C) = sum rho_i (2 P0_cos,i - 1) - i sum rho_i (2 P0_sin,i - 1).

    A None entry stands for a qubit that was never built and contributes 0.
    """
    if len(probs_cos) != rho.dim or len(probs_sin) != rho.dim:
        raise DimensionMismatch(
            f"density matrix has dimension {rho.dim}, got {len(probs_cos)} Cos and {len(probs_sin)} Sin estimates"
        )
    re = float(np.sum(rho.diagonal * _signals(probs_cos)))
    im = -float(np.sum(rho.diagonal * _signals(probs_sin)))
    return complex(re + 0.0, im + 0.0)
