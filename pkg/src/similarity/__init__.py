# Complex cosine similarity
from src.similarity.cosine import (
    Method,
    SimilarityResult,
    classical_similarity,
    magnitude,
    quantum_similarity,
    quantum_similarity_real,
)
from src.similarity.phase import phase_factor
