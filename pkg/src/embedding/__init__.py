# Embedding vectors, packing and qubit encoding
from src.embedding.vectors import (
    ComplexEmbedding,
    Embedding,
    RealEmbedding,
    canonicalize_phase,
    is_unit,
    normalize,
    require_unit,
    truncate,
)
from src.embedding.packing import pack_real_to_complex, unpack_complex_to_real
from src.embedding.encoding import EncodedDimension, encode_pair
from src.embedding.io import dump_embedding, load_embedding, parse_embedding, save_embedding
