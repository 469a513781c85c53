import os
from pathlib import Path

# Try to load dotenv if available, otherwise continue without it
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    import warnings
    warnings.warn("python-dotenv not installed. Using environment variables directly.")


class Config:
    """Central configuration for the similarity toolkit"""

    # Paths
    BASE_DIR = Path(__file__).parent.parent.parent
    FIXTURES_DIR = BASE_DIR / "fixtures"
    DATA_DIR = BASE_DIR / "data"
    RESULTS_DIR = DATA_DIR / "results"
    LOGS_DIR = Path(os.getenv("QCOSINE_LOGS_DIR", str(BASE_DIR / "logs")))

    # Sampling defaults
    DEFAULT_SHOTS = int(os.getenv("QCOSINE_SHOTS", "4096"))
    DEFAULT_SEED = int(os.getenv("QCOSINE_SEED", "0"))
    DEFAULT_NOISE_FLIP = float(os.getenv("QCOSINE_NOISE_FLIP", "0.0"))

    # Register parallelism
    PARALLEL_MIN_QUBITS = int(os.getenv("QCOSINE_PARALLEL_MIN_QUBITS", "4096"))
    MAX_WORKERS = int(os.getenv("QCOSINE_MAX_WORKERS", "8"))

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
    CONSOLE_LOG_LEVEL = os.getenv("QCOSINE_CONSOLE_LOG_LEVEL", "WARNING").upper()

    # Numeric tolerances
    UNIT_NORM_TOL = 1e-9
    EXACT_TOL = 1e-12

    # Synthetic 128-dim fixture pair
    SYNTHETIC_DIM = 128
    SYNTHETIC_SIMILARITY = 0.8682
    SYNTHETIC_SEED = 2025

    @classmethod
    def create_directories(cls):
        """Create necessary directories if they don't exist"""
        for dir_path in [cls.DATA_DIR, cls.RESULTS_DIR, cls.LOGS_DIR]:
            dir_path.mkdir(parents=True, exist_ok=True)
