"""Independent single-qubit circuits: initialize -> (S) -> H -> measure.

Every register built here is a tensor product of unentangled qubits, so each
qubit is kept as its own 2-amplitude state and never as a 2^N statevector.
"""
import cmath
from dataclasses import dataclass
from enum import Enum
from math import sqrt
from typing import Sequence

import numpy as np

from src.config.settings import Config
from src.utils.exceptions import InvalidState

# Gate matrices
_SQRT2_INV = 1 / sqrt(2)
H_GATE = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
S_GATE = np.array([[1, 0], [0, 1j]], dtype=complex)


class CircuitKind(Enum):
    """COS: H only, p0 tracks cos(phi - varphi). SIN: S then H, p0 tracks sin(phi - varphi)."""
    COS = "cos"
    SIN = "sin"

    @property
    def gates(self):
        return (H_GATE,) if self is CircuitKind.COS else (S_GATE, H_GATE)

    @property
    def unitary(self) -> np.ndarray:
        u = np.eye(2, dtype=complex)
        for gate in self.gates:
            u = gate @ u
        return u


@dataclass(frozen=True)
class QubitInit:
    amp0: complex
    amp1: complex

    def __post_init__(self):
        norm_sq = abs(self.amp0) ** 2 + abs(self.amp1) ** 2
        if abs(norm_sq - 1.0) > Config.EXACT_TOL:
            raise InvalidState(f"qubit amplitudes are not normalized: |amp0|^2 + |amp1|^2 = {norm_sq!r}")

    @classmethod
    def from_polar(cls, alpha: float, phi: float, beta: float, varphi: float) -> "QubitInit":
        """alpha e^{i phi}|0> + beta e^{i varphi}|1>"""
        return cls(alpha * cmath.exp(1j * phi), beta * cmath.exp(1j * varphi))

    @property
    def state(self) -> np.ndarray:
        return np.array([self.amp0, self.amp1], dtype=complex)

    def swapped(self) -> "QubitInit":
        return QubitInit(self.amp1, self.amp0)


def final_state(init: QubitInit, kind: CircuitKind) -> np.ndarray:
    return kind.unitary @ init.state


def exact_p0(inits: Sequence[QubitInit], kind: CircuitKind) -> np.ndarray:
    """P(|0>) for a batch of qubits run through the same circuit."""
    if not len(inits):
        return np.empty(0)
    states = np.array([[q.amp0, q.amp1] for q in inits], dtype=complex)
    out = states @ kind.unitary.T
    return np.clip(np.abs(out[:, 0]) ** 2, 0.0, 1.0)
