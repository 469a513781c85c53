"""Complex cosine similarity: classical oracle and circuit-based estimate.

Each non-degenerate dimension i is encoded into a Cos qubit (logical id 2i)
and a Sin qubit (logical id 2i + 1), both initialized to
alpha_i e^{i phi_i}|0> + beta_i e^{i varphi_i}|1>. The estimate is rebuilt as

    Re = 1/2 sum c_i^2 (2 P0_cos,i - 1)
    Im = -1/2 sum c_i^2 (2 P0_sin,i - 1)

The minus sign comes from sin(varphi - phi) = -sin(phi - varphi).
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from src.embedding.encoding import EncodedDimension, encode_pair
from src.embedding.vectors import ComplexEmbedding, Embedding, RealEmbedding
from src.qsim.circuits import CircuitKind, QubitInit
from src.qsim.estimates import ProbEstimate
from src.qsim.noise import NoiseModel, mitigate_readout
from src.qsim.sampler import EXACT, Mode, ShotsMode, run_register
from src.utils.exceptions import ConfigError, InputError, ZeroVector, check_same_dim
from src.utils.logging_config import ProductionLogger, log_performance

logger = ProductionLogger.get_logger('qcosine.similarity')


class Method(Enum):
    CLASSICAL_ORACLE = "classical_oracle"
    QUANTUM_EXACT = "quantum_exact"
    QUANTUM_SAMPLED = "quantum_sampled"


@dataclass(frozen=True, eq=False)
class SimilarityResult:
    value: complex
    per_dim: np.ndarray
    method: Method
    stderr_real: float = 0.0
    stderr_imag: float = 0.0
    shots: int = 0
    seed: Optional[int] = None
    mitigated: bool = False
    c_squared: Optional[np.ndarray] = None
    # one entry per dimension, None where no qubit was built
    probs_cos: Tuple[Optional[ProbEstimate], ...] = field(default=())
    probs_sin: Tuple[Optional[ProbEstimate], ...] = field(default=())

    def __post_init__(self):
        per_dim = np.array(self.per_dim, dtype=np.complex128)
        per_dim.setflags(write=False)
        object.__setattr__(self, "per_dim", per_dim)
        object.__setattr__(self, "value", complex(self.value))

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    @property
    def magnitude(self) -> float:
        return magnitude(self)

    @property
    def dim(self) -> int:
        return int(self.per_dim.size)

    def to_dict(self) -> dict:
        out = {"re": self.real, "im": self.imag, "method": self.method.value}
        if self.method is not Method.CLASSICAL_ORACLE:
            out.update(stderr_re=self.stderr_real, stderr_im=self.stderr_imag)
        if self.method is Method.QUANTUM_SAMPLED:
            out.update(shots=self.shots, seed=self.seed)
        if self.mitigated:
            out["mitigated"] = True
        return out


def magnitude(result: SimilarityResult) -> float:
    return math.hypot(result.value.real, result.value.imag)


def classical_similarity(a: Embedding, b: Embedding) -> SimilarityResult:
    """sum conj(a_i) b_i / (|a| |b|); non-unit inputs are normalized here."""
    check_same_dim(a.dim, b.dim)
    norm_a, norm_b = a.norm, b.norm
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cosine similarity is undefined for a zero vector")

    if isinstance(a, RealEmbedding) and isinstance(b, RealEmbedding):
        per_dim = (a.values / norm_a) * (b.values / norm_b) + 0j
    else:
        a, b = a.as_complex(), b.as_complex()
        per_dim = np.conj(a.values / norm_a) * (b.values / norm_b)

    return SimilarityResult(value=per_dim.sum(), per_dim=per_dim, method=Method.CLASSICAL_ORACLE)


def _build_register(dims: List[EncodedDimension], include_sin: bool):
    inits, kinds, ids = [], [], []
    for d in dims:
        if d.degenerate:
            continue
        init = QubitInit.from_polar(d.alpha, d.phi_a, d.beta, d.phi_b)
        inits.append(init)
        kinds.append(CircuitKind.COS)
        ids.append(2 * d.index)
        if include_sin:
            inits.append(init)
            kinds.append(CircuitKind.SIN)
            ids.append(2 * d.index + 1)
    return inits, kinds, ids


def _estimate(a: ComplexEmbedding, b: ComplexEmbedding, include_sin: bool, mode: Mode,
              noise: Optional[NoiseModel], mitigate: bool, calibration: Optional[NoiseModel],
              parallel: Optional[bool]) -> SimilarityResult:
    check_same_dim(a.dim, b.dim)
    dims = encode_pair(a, b)
    n = len(dims)

    cal = calibration if calibration is not None else noise
    if mitigate and cal is None:
        raise ConfigError("readout mitigation needs a noise model or an explicit calibration")

    inits, kinds, ids = _build_register(dims, include_sin)
    n_degenerate = sum(d.degenerate for d in dims)
    if n_degenerate:
        logger.debug(f"{n_degenerate} degenerate dimension(s) skipped")

    estimates = run_register(inits, kinds, mode, noise, qubit_ids=ids, parallel=parallel)
    if mitigate:
        estimates = [mitigate_readout(e, cal) for e in estimates]

    probs_cos: List[Optional[ProbEstimate]] = [None] * n
    probs_sin: List[Optional[ProbEstimate]] = [None] * n
    for qubit_id, est in zip(ids, estimates):
        slot = probs_cos if qubit_id % 2 == 0 else probs_sin
        slot[qubit_id // 2] = est

    c2 = np.array([d.c_squared for d in dims])
    sig_cos = np.array([p.signal if p is not None else 0.0 for p in probs_cos])
    sig_sin = np.array([p.signal if p is not None else 0.0 for p in probs_sin])
    se_cos = np.array([p.stderr if p is not None else 0.0 for p in probs_cos])
    se_sin = np.array([p.stderr if p is not None else 0.0 for p in probs_sin])

    re_terms = 0.5 * c2 * sig_cos
    im_terms = -0.5 * c2 * sig_sin

    sampled = isinstance(mode, ShotsMode)
    return SimilarityResult(
        value=complex(re_terms.sum() + 0.0, im_terms.sum() + 0.0),
        per_dim=re_terms + 1j * im_terms,
        method=Method.QUANTUM_SAMPLED if sampled else Method.QUANTUM_EXACT,
        stderr_real=float(np.sqrt(np.sum(c2 ** 2 * se_cos ** 2))),
        stderr_imag=float(np.sqrt(np.sum(c2 ** 2 * se_sin ** 2))),
        shots=mode.shots if sampled else 0,
        seed=mode.seed if sampled else None,
        mitigated=mitigate,
        c_squared=c2,
        probs_cos=tuple(probs_cos),
        probs_sin=tuple(probs_sin),
    )


@log_performance("similarity.quantum_similarity")
def quantum_similarity(a: Embedding, b: Embedding, mode: Mode = EXACT, noise: Optional[NoiseModel] = None,
                       mitigate: bool = False, calibration: Optional[NoiseModel] = None,
                       parallel: Optional[bool] = None) -> SimilarityResult:
    """Estimate S_C(a, b) from Cos and Sin qubit measurements. Inputs must be unit-normalized."""
    return _estimate(a.as_complex(), b.as_complex(), True, mode, noise, mitigate, calibration, parallel)


@log_performance("similarity.quantum_similarity_real")
def quantum_similarity_real(a: RealEmbedding, b: RealEmbedding, mode: Mode = EXACT,
                            noise: Optional[NoiseModel] = None, mitigate: bool = False,
                            calibration: Optional[NoiseModel] = None,
                            parallel: Optional[bool] = None) -> SimilarityResult:
    """Real inputs only need the Cos qubits; the Sin terms are identically zero."""
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, RealEmbedding):
            raise InputError(f"{name} must be a RealEmbedding, got {type(v).__name__}")
    return _estimate(a.as_complex(), b.as_complex(), False, mode, noise, mitigate, calibration, parallel)
