"""Two-slit interference and its single-qubit analogue.

Waves psi_1 = A e^{i phi} and psi_2 = B e^{i varphi} meet on the screen with
intensity |psi_1 + psi_2|^2 = A^2 + B^2 + 2AB cos(phi - varphi). A qubit
initialized to psi_1|0> + psi_2|1> and sent through H gives P(|0>) = |psi_1 + psi_2|^2 / 2.
"""
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np
import pandas as pd

from src.qsim.circuits import CircuitKind, QubitInit, exact_p0
from src.utils.exceptions import BadDimension, InputError
from src.utils.logging_config import ProductionLogger

logger = ProductionLogger.get_logger('qcosine.interference')

SCAN_COLUMNS = ["delta_phase", "intensity", "p0", "p1"]


@dataclass(frozen=True)
class SlitConfig:
    amp_a: float
    amp_b: float
    phase_a: float = 0.0
    phase_b: float = 0.0

    def __post_init__(self):
        if self.amp_a < 0 or self.amp_b < 0:
            raise InputError(f"slit amplitudes must be non-negative, got A={self.amp_a}, B={self.amp_b}")

    @property
    def total_power(self) -> float:
        return self.amp_a ** 2 + self.amp_b ** 2

    def with_delta(self, delta: float) -> "SlitConfig":
        return SlitConfig(self.amp_a, self.amp_b, self.phase_b + delta, self.phase_b)

    def qubit(self) -> QubitInit:
        """Circuit analogue on the power-normalized amplitudes."""
        power = math.sqrt(self.total_power)
        if power == 0.0:
            raise BadDimension("both slit amplitudes are zero; there is no qubit analogue")
        return QubitInit.from_polar(self.amp_a / power, self.phase_a, self.amp_b / power, self.phase_b)


def intensity(cfg: SlitConfig) -> float:
    return (cfg.amp_a ** 2 + cfg.amp_b ** 2
            + 2.0 * cfg.amp_a * cfg.amp_b * math.cos(cfg.phase_a - cfg.phase_b))


def phase_scan(cfg_base: SlitConfig, steps: int) -> List[Tuple[float, float, float, float]]:
    """Sweep phi - varphi over [-pi, pi] (endpoints included) in `steps` points."""
    if steps < 2:
        raise BadDimension(f"a phase scan needs at least 2 steps, got {steps}")
    if abs(cfg_base.total_power - 1.0) > 1e-12:
        logger.info(f"Slit power A^2 + B^2 = {cfg_base.total_power:.6g}; circuit columns use normalized amplitudes")

    deltas = np.linspace(-np.pi, np.pi, steps)
    configs = [cfg_base.with_delta(float(d)) for d in deltas]
    p0s = exact_p0([c.qubit() for c in configs], CircuitKind.COS)

    return [
        (float(d), intensity(c), float(p0), 1.0 - float(p0))
        for d, c, p0 in zip(deltas, configs, p0s)
    ]


def scan_frame(rows: List[Tuple[float, float, float, float]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=SCAN_COLUMNS)


def plot_scan(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Write the scan as an interactive HTML figure."""
    import plotly.graph_objects as go

    fig = go.Figure()
    fig.add_trace(go.Scatter(x=frame['delta_phase'], y=frame['intensity'], mode='lines', name='Screen intensity'))
    fig.add_trace(go.Scatter(x=frame['delta_phase'], y=frame['p0'], mode='lines', name='P(|0>)'))
    fig.add_trace(go.Scatter(x=frame['delta_phase'], y=frame['p1'], mode='lines', name='P(|1>)', line=dict(dash='dash')))
    fig.update_layout(
        title="Two-slit intensity and Hadamard-circuit probabilities",
        xaxis_title="phase difference (rad)",
        yaxis_title="intensity / probability",
    )

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.write_html(str(path))
    logger.info(f"Scan figure written to {path}")
    return path
