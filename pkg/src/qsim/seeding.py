"""Seed derivation for reproducible per-qubit random streams.

Qubit k of a register seeded with s draws from default_rng(s XOR splitmix64(k)),
so results do not depend on evaluation order.
"""
MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    z = (x + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def sub_seed(seed: int, k: int) -> int:
    return (seed & MASK64) ^ splitmix64(k)
