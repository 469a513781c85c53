"""Symmetric readout bit-flip noise and its algebraic inverse.

A measured bit flips with probability f in either direction, so the observed
P(|0>) is p0 (1 - 2f) + f. Mitigation solves that for p0.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.qsim.estimates import ProbEstimate
from src.utils.exceptions import InvalidState


@dataclass(frozen=True)
class NoiseModel:
    readout_flip: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.readout_flip < 0.5:
            raise InvalidState(f"readout_flip must be in [0, 0.5), got {self.readout_flip!r}")

    @property
    def contraction(self) -> float:
        return 1.0 - 2.0 * self.readout_flip


def apply_readout_noise(est: ProbEstimate, noise: NoiseModel) -> ProbEstimate:
    """Expected readout of an exact estimate under the flip channel."""
    f = noise.readout_flip
    return ProbEstimate.exact(est.p0 * noise.contraction + f)


def flip_counts(count0: int, shots: int, noise: NoiseModel, rng: np.random.Generator) -> Tuple[int, int]:
    """Flip each recorded bit independently with probability readout_flip."""
    count1 = shots - count0
    if noise.readout_flip == 0.0:
        return count0, count1
    lost0 = int(rng.binomial(count0, noise.readout_flip))
    gained0 = int(rng.binomial(count1, noise.readout_flip))
    count0 = count0 - lost0 + gained0
    return count0, shots - count0


def mitigate_readout(raw: ProbEstimate, noise: NoiseModel) -> ProbEstimate:
    f = noise.readout_flip
    if f == 0.0:
        return raw
    scale = 1.0 / noise.contraction
    p0 = min(max((raw.p0 - f) * scale, 0.0), 1.0)
    return ProbEstimate(p0=p0, p1=1.0 - p0, shots=raw.shots, stderr=raw.stderr * scale)
