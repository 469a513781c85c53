from typing import Tuple

from src.embedding.vectors import ComplexEmbedding, Embedding, canonicalize_phase
from src.utils.exceptions import DegenerateLeadingDimension, check_same_dim


def phase_factor(a: Embedding, b: Embedding) -> Tuple[float, ComplexEmbedding, ComplexEmbedding]:
    """Pull the global phase e^{i(varphi_1 - phi_1)} out of S_C(a, b).

    Returns (global_phase, reduced_a, reduced_b) with
    S_C(a, b) = e^{i global_phase} S_C(reduced_a, reduced_b); the first dimension
    of the reduced pair carries no relative phase.
    """
    a, b = a.as_complex(), b.as_complex()
    check_same_dim(a.dim, b.dim)
    if a.magnitudes[0] == 0.0 or b.magnitudes[0] == 0.0:
        raise DegenerateLeadingDimension("the first dimension of both embeddings must be non-zero")

    global_phase = float(canonicalize_phase(b.phases[0] - a.phases[0]))
    reduced_b = ComplexEmbedding(b.magnitudes, b.phases - global_phase)
    return global_phase, a, reduced_b
