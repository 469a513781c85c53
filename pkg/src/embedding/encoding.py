"""Per-dimension qubit payloads for a pair of embeddings.

For dimension i the pair (a_i, b_i) is rescaled by c_i = sqrt(a_i^2 + b_i^2) so
that (alpha_i, beta_i) = (a_i, b_i) / c_i is a valid pair of qubit amplitudes.
The amplitudes are taken as (cos theta_i, sin theta_i) with theta_i = atan2(b_i, a_i),
which stays normalized when c_i is subnormal.
"""
from dataclasses import dataclass
from typing import List

import numpy as np

from src.embedding.vectors import Embedding, require_unit
from src.utils.exceptions import check_same_dim


@dataclass(frozen=True)
class EncodedDimension:
    alpha: float
    beta: float
    phi_a: float
    phi_b: float
    c: float
    index: int

    @property
    def degenerate(self) -> bool:
        """Both components are zero: no qubit is built and the contribution is 0."""
        return self.c == 0.0

    @property
    def c_squared(self) -> float:
        return self.c * self.c


def encode_pair(a: Embedding, b: Embedding) -> List[EncodedDimension]:
    a, b = a.as_complex(), b.as_complex()
    check_same_dim(a.dim, b.dim)
    require_unit(a, "a")
    require_unit(b, "b")

    c = np.hypot(a.magnitudes, b.magnitudes)
    theta = np.arctan2(b.magnitudes, a.magnitudes)
    # exact zeros stay exact; cos(pi/2) is not 0 in floating point
    alpha = np.where(a.magnitudes > 0, np.cos(theta), 0.0)
    beta = np.where(b.magnitudes > 0, np.sin(theta), 0.0)

    return [
        EncodedDimension(
            alpha=float(alpha[i]),
            beta=float(beta[i]),
            phi_a=float(a.phases[i]),
            phi_b=float(b.phases[i]),
            c=float(c[i]),
            index=i,
        )
        for i in range(a.dim)
    ]
