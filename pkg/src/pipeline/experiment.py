import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import stats
from tqdm import tqdm

from src.config.settings import Config
from src.embedding.vectors import Embedding, RealEmbedding, require_unit
from src.qsim.noise import NoiseModel
from src.qsim.sampler import ShotsMode
from src.similarity.cosine import SimilarityResult, classical_similarity, quantum_similarity, quantum_similarity_real
from src.utils.exceptions import ConfigError, check_same_dim
from src.utils.logging_config import PerformanceTimer, ProductionLogger

logger = ProductionLogger.get_logger('qcosine.experiment')


class SimilarityExperiment:
    """Seeded multi-run study of sampled similarity estimates against the exact value"""

    def __init__(self, a: Embedding, b: Embedding):
        check_same_dim(a.dim, b.dim)
        require_unit(a, "a")
        require_unit(b, "b")
        self.a = a
        self.b = b
        self.real = isinstance(a, RealEmbedding) and isinstance(b, RealEmbedding)
        self.exact = classical_similarity(a, b).value

        logger.info(f"Experiment ready: dim={a.dim}, real={self.real}, exact={self.exact:.6f}")

    def estimate(self, shots: int, seed: int, noise: Optional[NoiseModel] = None, mitigate: bool = False,
                 calibration: Optional[NoiseModel] = None) -> SimilarityResult:
        fn = quantum_similarity_real if self.real else quantum_similarity
        return fn(self.a, self.b, ShotsMode(shots, seed), noise, mitigate=mitigate, calibration=calibration)

    def run_seed_sweep(self, shots: int, seeds: Sequence[int], noise: Optional[NoiseModel] = None,
                       mitigate: bool = False, calibration: Optional[NoiseModel] = None,
                       sigma: float = 4.0, progress: bool = False) -> Dict:
        """Repeat the sampled estimate once per seed and summarize the spread"""
        if not seeds:
            raise ConfigError("a sweep needs at least one seed")

        runs = []
        with PerformanceTimer("experiment.run_seed_sweep", {"shots": shots, "runs": len(seeds)}):
            for seed in tqdm(seeds, desc="Seed sweep", disable=not progress, file=sys.stderr):
                result = self.estimate(shots, seed, noise, mitigate, calibration)
                runs.append({
                    'seed': int(seed),
                    're': result.real,
                    'im': result.imag,
                    'stderr_re': result.stderr_real,
                    'stderr_im': result.stderr_imag,
                })

        statistics = self._calculate_sweep_statistics(runs, sigma)
        logger.info(
            f"Sweep complete: Re {statistics['mean_re']:.5f} ± {statistics['std_re']:.5f} "
            f"(exact {self.exact.real:.5f}), within {sigma}σ: {statistics['fraction_within_sigma']:.1%}"
        )

        return {
            'runs': runs,
            'statistics': statistics,
            'metadata': {
                'dim': self.a.dim,
                'real_inputs': self.real,
                'shots': int(shots),
                'n_runs': len(runs),
                'readout_flip': noise.readout_flip if noise is not None else 0.0,
                'mitigated': mitigate,
                'timestamp': datetime.now().isoformat(),
            }
        }

    def _calculate_sweep_statistics(self, runs: List[Dict], sigma: float) -> Dict:
        re = np.array([r['re'] for r in runs])
        im = np.array([r['im'] for r in runs])
        se_re = np.array([r['stderr_re'] for r in runs])
        se_im = np.array([r['stderr_im'] for r in runs])

        dev_re = np.abs(re - self.exact.real)
        dev_im = np.abs(im - self.exact.imag)
        within = (dev_re <= sigma * se_re + 1e-12) & (dev_im <= sigma * se_im + 1e-12)

        ddof = 1 if len(runs) > 1 else 0
        return {
            'exact_re': self.exact.real,
            'exact_im': self.exact.imag,
            'mean_re': float(re.mean()),
            'mean_im': float(im.mean()),
            'std_re': float(re.std(ddof=ddof)),
            'std_im': float(im.std(ddof=ddof)),
            'mean_stderr_re': float(se_re.mean()),
            'mean_stderr_im': float(se_im.mean()),
            'bias_re': float(re.mean() - self.exact.real),
            'bias_im': float(im.mean() - self.exact.imag),
            'max_abs_dev_re': float(dev_re.max()),
            'max_abs_dev_im': float(dev_im.max()),
            'sigma': float(sigma),
            'fraction_within_sigma': float(within.mean()),
            # two-sided normal coverage per component
            'expected_fraction_within_sigma': float(2 * stats.norm.cdf(sigma) - 1),
        }

    def mitigation_study(self, shots: int, seeds: Sequence[int], noise: NoiseModel,
                         calibration: Optional[NoiseModel] = None, progress: bool = False) -> Dict:
        """Compare raw and readout-mitigated estimates seed by seed (same counts for both)"""
        if noise is None or noise.readout_flip == 0.0:
            raise ConfigError("a mitigation study needs a non-zero readout flip")

        trials = []
        for seed in tqdm(seeds, desc="Mitigation study", disable=not progress, file=sys.stderr):
            raw = self.estimate(shots, seed, noise)
            mitigated = self.estimate(shots, seed, noise, mitigate=True, calibration=calibration)
            raw_error = abs(raw.value - self.exact)
            mitigated_error = abs(mitigated.value - self.exact)
            trials.append({
                'seed': int(seed),
                'raw_error': raw_error,
                'mitigated_error': mitigated_error,
                'mitigation_wins': bool(mitigated_error < raw_error),
            })

        wins = sum(t['mitigation_wins'] for t in trials)
        logger.info(f"Mitigation closer to exact in {wins}/{len(trials)} trials")

        return {
            'trials': trials,
            'statistics': {
                'mitigation_wins': wins,
                'n_trials': len(trials),
                'mean_raw_error': float(np.mean([t['raw_error'] for t in trials])),
                'mean_mitigated_error': float(np.mean([t['mitigated_error'] for t in trials])),
            },
            'metadata': {
                'shots': int(shots),
                'readout_flip': noise.readout_flip,
                'calibration_flip': (calibration or noise).readout_flip,
                'timestamp': datetime.now().isoformat(),
            }
        }

    def export_results(self, results: Dict, output_dir: Optional[str] = None) -> Dict[str, str]:
        """Export sweep results to files"""
        if output_dir is None:
            Config.create_directories()
            output_dir = Config.RESULTS_DIR / datetime.now().strftime('%Y-%m-%d')

        output_path = Path(output_dir)
        output_path.mkdir(parents=True, exist_ok=True)

        exported_files = {}

        summary_file = output_path / "sweep_summary.json"
        with open(summary_file, 'w') as f:
            json.dump({'statistics': results['statistics'], 'metadata': results['metadata']}, f, indent=2)
        exported_files['summary'] = str(summary_file)

        detail_key = 'runs' if 'runs' in results else 'trials'
        detail_file = output_path / f"sweep_{detail_key}.json"
        with open(detail_file, 'w') as f:
            json.dump(results[detail_key], f, indent=2)
        exported_files[detail_key] = str(detail_file)

        logger.info(f"Exported sweep results to {output_path}")
        return exported_files
