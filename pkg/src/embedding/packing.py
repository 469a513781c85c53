"""Bidirectional packing between 2N-dim real and N-dim complex embeddings.

Consecutive pairs (x, y) become one complex component x + iy.
"""
import numpy as np

from src.embedding.vectors import ComplexEmbedding, RealEmbedding
from src.utils.exceptions import OddDimension


def pack_real_to_complex(v: RealEmbedding) -> ComplexEmbedding:
    if v.dim % 2:
        raise OddDimension(f"packing needs an even dimension, got {v.dim}")
    x, y = v.values[0::2], v.values[1::2]
    magnitudes = np.hypot(x, y)
    # atan2 equals the arccos rule (sign taken from y) without losing precision near 0 and pi
    phases = np.where(magnitudes > 0, np.arctan2(y, x), 0.0)
    return ComplexEmbedding(magnitudes, phases)


def unpack_complex_to_real(v: ComplexEmbedding) -> RealEmbedding:
    out = np.empty(2 * v.dim, dtype=np.float64)
    out[0::2] = v.magnitudes * np.cos(v.phases)
    out[1::2] = v.magnitudes * np.sin(v.phases)
    return RealEmbedding(out)
