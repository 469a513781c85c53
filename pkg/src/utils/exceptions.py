"""Error hierarchy shared by every module.

InputError subclasses are bad data (CLI exit 2), ConfigError is a bad flag or
setting (CLI exit 3).
"""


class QCosineError(Exception):
    """Base class for all toolkit errors"""


class InputError(QCosineError, ValueError):
    """Invalid input data"""


class ConfigError(QCosineError, ValueError):
    """Invalid run configuration"""


class InvalidState(QCosineError, ValueError):
    """A qubit state or noise model violates its invariants"""


class ZeroVector(InputError):
    pass


class OddDimension(InputError):
    pass


class BadDimension(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotNormalized(InputError):
    pass


class DegenerateLeadingDimension(InputError):
    pass


class EmbeddingFormatError(InputError):
    pass


def check_same_dim(dim_a: int, dim_b: int, what: str = "embeddings"):
    if dim_a != dim_b:
        raise DimensionMismatch(f"{what} have different dimensions: {dim_a} vs {dim_b}")
