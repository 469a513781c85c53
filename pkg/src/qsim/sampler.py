"""Exact evaluation and shot sampling of single-qubit registers."""
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.config.settings import Config
from src.qsim.circuits import CircuitKind, QubitInit, exact_p0
from src.qsim.estimates import ProbEstimate
from src.qsim.noise import NoiseModel, apply_readout_noise, flip_counts
from src.qsim.seeding import MASK64, sub_seed
from src.utils.exceptions import ConfigError, DimensionMismatch
from src.utils.logging_config import PerformanceTimer, ProductionLogger

logger = ProductionLogger.get_logger('qcosine.qsim')


@dataclass(frozen=True)
class ExactMode:
    def describe(self) -> str:
        return "exact"


@dataclass(frozen=True)
class ShotsMode:
    shots: int
    seed: int = 0

    def __post_init__(self):
        if int(self.shots) < 1:
            raise ConfigError(f"shots must be >= 1, got {self.shots}")

    def describe(self) -> str:
        return f"shots={self.shots}, seed={self.seed}"


Mode = Union[ExactMode, ShotsMode]
EXACT = ExactMode()


def exact_probability(init: QubitInit, kind: CircuitKind) -> ProbEstimate:
    return ProbEstimate.exact(exact_p0([init], kind)[0])


def _draw_count0(p0: float, shots: int, seed: int, flip: float) -> int:
    rng = np.random.default_rng(seed & MASK64)
    count0 = int(rng.binomial(shots, p0))
    if flip > 0.0:
        count0, _ = flip_counts(count0, shots, NoiseModel(flip), rng)
    return count0


def sample(init: QubitInit, kind: CircuitKind, shots: int, seed: int,
           noise: Optional[NoiseModel] = None) -> ProbEstimate:
    """Measure `shots` times. One Binomial(shots, p0) draw stands in for the shot loop."""
    if shots < 1:
        raise ConfigError(f"shots must be >= 1, got {shots}")
    p0 = exact_p0([init], kind)[0]
    flip = noise.readout_flip if noise is not None else 0.0
    return ProbEstimate.from_counts(_draw_count0(p0, shots, seed, flip), shots)


def _sample_batch(args: Tuple) -> List[int]:
    """Sample a batch of qubits (module-level so it pickles into worker processes)."""
    p0s, seeds, shots, flip = args
    return [_draw_count0(p, shots, s, flip) for p, s in zip(p0s, seeds)]


def _sample_parallel(p0s: np.ndarray, seeds: List[int], shots: int, flip: float) -> List[int]:
    n_workers = max(1, min(mp.cpu_count(), Config.MAX_WORKERS, len(p0s)))
    chunk = -(-len(p0s) // n_workers)
    batches = [
        (p0s[i:i + chunk].tolist(), seeds[i:i + chunk], shots, flip)
        for i in range(0, len(p0s), chunk)
    ]
    logger.info(f"Sampling {len(p0s)} qubits on {n_workers} workers ({chunk} per batch)")

    with ProcessPoolExecutor(max_workers=n_workers) as executor:
        results = list(executor.map(_sample_batch, batches))
    return [c for batch in results for c in batch]


def run_register(inits: Sequence[QubitInit], kinds: Sequence[CircuitKind], mode: Mode = EXACT,
                 noise: Optional[NoiseModel] = None, qubit_ids: Optional[Sequence[int]] = None,
                 parallel: Optional[bool] = None) -> List[ProbEstimate]:
    """Evaluate every qubit of an unentangled register.

    qubit_ids are the logical indices used for sub-seed derivation (default:
    positions). parallel=None fans out only for large sampled registers.
    """
    if len(inits) != len(kinds):
        raise DimensionMismatch(f"{len(inits)} initial states but {len(kinds)} circuit kinds")
    if qubit_ids is None:
        qubit_ids = range(len(inits))
    elif len(qubit_ids) != len(inits):
        raise DimensionMismatch(f"{len(qubit_ids)} qubit ids for {len(inits)} qubits")
    if not len(inits):
        return []

    kinds = list(kinds)
    p0s = np.empty(len(inits))
    for kind in CircuitKind:
        idx = [i for i, k in enumerate(kinds) if k is kind]
        if idx:
            p0s[idx] = exact_p0([inits[i] for i in idx], kind)

    if isinstance(mode, ExactMode):
        estimates = [ProbEstimate.exact(p) for p in p0s]
        if noise is not None:
            estimates = [apply_readout_noise(e, noise) for e in estimates]
        return estimates

    flip = noise.readout_flip if noise is not None else 0.0
    seeds = [sub_seed(mode.seed, int(k)) for k in qubit_ids]
    if parallel is None:
        parallel = len(inits) >= Config.PARALLEL_MIN_QUBITS

    with PerformanceTimer("qsim.run_register", {"qubits": len(inits), "shots": mode.shots, "parallel": parallel}):
        if parallel:
            counts = _sample_parallel(p0s, seeds, mode.shots, flip)
        else:
            counts = _sample_batch((p0s.tolist(), seeds, mode.shots, flip))

    return [ProbEstimate.from_counts(c, mode.shots) for c in counts]
