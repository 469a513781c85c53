"""JSON embedding files.

    {"kind": "real", "values": [e_0, e_1, ...]}
    {"kind": "complex", "values": [[magnitude, phase_radians], ...]}
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from src.embedding.vectors import ComplexEmbedding, Embedding, RealEmbedding
from src.utils.exceptions import EmbeddingFormatError, InputError


def parse_embedding(payload: Dict[str, Any]) -> Embedding:
    if not isinstance(payload, dict):
        raise EmbeddingFormatError("embedding file must hold a JSON object")
    kind = payload.get("kind")
    values = payload.get("values")
    if not isinstance(values, list) or not values:
        raise EmbeddingFormatError("'values' must be a non-empty array")

    try:
        if kind == "real":
            arr = np.asarray(values, dtype=np.float64)
            if arr.ndim != 1:
                raise EmbeddingFormatError("real 'values' must be a flat array of numbers")
            return RealEmbedding(arr)
        if kind == "complex":
            arr = np.asarray(values, dtype=np.float64)
            if arr.ndim != 2 or arr.shape[1] != 2:
                raise EmbeddingFormatError("complex 'values' must be an array of [magnitude, phase] pairs")
            return ComplexEmbedding(arr[:, 0], arr[:, 1])
    except (TypeError, ValueError) as e:
        if isinstance(e, InputError):
            raise EmbeddingFormatError(str(e)) from e
        raise EmbeddingFormatError(f"non-numeric entry in 'values': {e}") from e

    raise EmbeddingFormatError(f"'kind' must be 'real' or 'complex', got {kind!r}")


def load_embedding(path: Union[str, Path]) -> Embedding:
    path = Path(path)
    try:
        with open(path) as f:
            payload = json.load(f)
    except OSError as e:
        raise EmbeddingFormatError(f"cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise EmbeddingFormatError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})") from e
    return parse_embedding(payload)


def embedding_to_dict(v: Embedding) -> Dict[str, Any]:
    if isinstance(v, ComplexEmbedding):
        return {
            "kind": "complex",
            "values": [[float(m), float(p)] for m, p in zip(v.magnitudes, v.phases)],
        }
    return {"kind": "real", "values": [float(x) for x in v.values]}


def dump_embedding(v: Embedding) -> str:
    # json renders floats with repr, which round-trips exactly
    return json.dumps(embedding_to_dict(v))


def save_embedding(v: Embedding, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        f.write(dump_embedding(v) + "\n")
    return path
