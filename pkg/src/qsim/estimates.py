from dataclasses import dataclass
from math import sqrt

from src.config.settings import Config
from src.utils.exceptions import InvalidState


@dataclass(frozen=True)
class ProbEstimate:
    """P(|0>) / P(|1>) of one qubit. shots == 0 marks an exact (analytic) value."""
    p0: float
    p1: float
    shots: int = 0
    stderr: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.p0 <= 1.0 and 0.0 <= self.p1 <= 1.0):
            raise InvalidState(f"probabilities out of range: p0={self.p0!r}, p1={self.p1!r}")
        if abs(self.p0 + self.p1 - 1.0) > Config.EXACT_TOL:
            raise InvalidState(f"p0 + p1 = {self.p0 + self.p1!r}")
        if self.shots < 0 or self.stderr < 0:
            raise InvalidState("shots and stderr must be non-negative")

    @classmethod
    def exact(cls, p0: float) -> "ProbEstimate":
        p0 = min(max(float(p0), 0.0), 1.0)
        return cls(p0=p0, p1=1.0 - p0)

    @classmethod
    def from_counts(cls, count0: int, shots: int) -> "ProbEstimate":
        count0, shots = int(count0), int(shots)
        p0 = count0 / shots
        p1 = (shots - count0) / shots
        return cls(p0=p0, p1=p1, shots=shots, stderr=sqrt(p0 * p1 / shots))

    @property
    def is_exact(self) -> bool:
        return self.shots == 0

    @property
    def signal(self) -> float:
        """2 p0 - 1, the interference term scaled to [-1, 1]."""
        return 2.0 * self.p0 - 1.0
