#!/usr/bin/env python3
"""
qcosine - Main CLI Entrypoint

Complex cosine similarity between embeddings, computed classically and by
exact evaluation or shot sampling of single-qubit interference circuits.

Usage:
    python main.py similarity A.json B.json [--mode exact|shots] [--shots N] [--seed S]
                   [--noise-flip F] [--mitigate] [--calibration-flip F] [--truncate K] [--output json|csv]
    python main.py analyze A.json B.json [--truncate K]
    python main.py double-slit --A 0.6 --B 0.8 [--steps 101] [--plot scan.html]
    python main.py pack FILE.json --direction to-complex|to-real
    python main.py sweep A.json B.json [--shots N] [--runs R] [--study spread|mitigation]
    python main.py synth [--dim 128] [--similarity 0.8682] [--seed 2025] [--out-dir fixtures]

Exit codes: 0 success, 2 input error, 3 configuration error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

import pandas as pd

from src.analysis.density import density_matrix, expectation, spectrum
from src.config.run_config import RunConfig
from src.config.settings import Config
from src.data.synthetic import generate_pair
from src.embedding.io import dump_embedding, load_embedding, save_embedding
from src.embedding.packing import pack_real_to_complex, unpack_complex_to_real
from src.embedding.vectors import ComplexEmbedding, Embedding, RealEmbedding, normalize, truncate
from src.interference.double_slit import SlitConfig, phase_scan, plot_scan, scan_frame
from src.pipeline.experiment import SimilarityExperiment
from src.qsim.sampler import EXACT
from src.similarity.cosine import classical_similarity, quantum_similarity, quantum_similarity_real
from src.utils.exceptions import ConfigError, EmbeddingFormatError, InputError, InvalidState
from src.utils.logging_config import ProductionLogger, setup_production_logging

logger = ProductionLogger.get_logger('qcosine.cli')

EXIT_OK, EXIT_INPUT, EXIT_CONFIG = 0, 2, 3


class CLIArgumentParser(argparse.ArgumentParser):
    """Flag parse failures are configuration errors (exit 3), not argparse's exit 2"""

    def error(self, message):
        raise ConfigError(message)


def _emit_json(payload) -> None:
    print(json.dumps(payload))


def _load_pair(file_a: str, file_b: str, k: Optional[int]) -> Tuple[Embedding, Embedding]:
    vectors = []
    for path in (file_a, file_b):
        v = load_embedding(path)
        v = truncate(v, k) if k is not None else normalize(v)
        vectors.append(v)
    a, b = vectors
    logger.info(f"Loaded {file_a} ({type(a).__name__}, dim {a.dim}) and {file_b} ({type(b).__name__}, dim {b.dim})")
    return a, b


def _run_config(args) -> RunConfig:
    return RunConfig(
        mode=args.mode,
        shots=args.shots,
        seed=args.seed,
        noise_flip=args.noise_flip,
        mitigate=args.mitigate,
        calibration_flip=args.calibration_flip,
        output=getattr(args, "output", "json"),
    ).validate()


def _is_real_pair(a: Embedding, b: Embedding) -> bool:
    return isinstance(a, RealEmbedding) and isinstance(b, RealEmbedding)


def cmd_similarity(args) -> int:
    """Classical oracle vs circuit estimate for two embedding files"""
    cfg = _run_config(args)
    a, b = _load_pair(args.file_a, args.file_b, args.truncate)

    classical = classical_similarity(a, b)
    estimate = quantum_similarity_real if _is_real_pair(a, b) else quantum_similarity
    quantum = estimate(a, b, cfg.run_mode, cfg.noise, mitigate=cfg.mitigate, calibration=cfg.calibration)

    if cfg.output == "csv":
        rows = [{
            'index': i,
            'c_squared': float(quantum.c_squared[i]),
            'contribution_re': float(quantum.per_dim[i].real),
            'contribution_im': float(quantum.per_dim[i].imag),
            'p0_cos': quantum.probs_cos[i].p0 if quantum.probs_cos[i] is not None else None,
            'p0_sin': quantum.probs_sin[i].p0 if quantum.probs_sin[i] is not None else None,
        } for i in range(quantum.dim)]
        pd.DataFrame(rows).to_csv(sys.stdout, index=False)
        return EXIT_OK

    _emit_json({
        'dim': a.dim,
        'classical': {'re': classical.real, 'im': classical.imag},
        'quantum': quantum.to_dict(),
        'magnitude': quantum.magnitude,
        'classical_magnitude': classical.magnitude,
        'delta': abs(quantum.value - classical.value),
    })
    return EXIT_OK


def cmd_analyze(args) -> int:
    """Density matrix diagonal, trace and spectrum for an embedding pair"""
    a, b = _load_pair(args.file_a, args.file_b, args.truncate)

    rho = density_matrix(a, b)
    estimate = quantum_similarity_real if _is_real_pair(a, b) else quantum_similarity
    exact = estimate(a, b, EXACT)
    value = expectation(rho, exact.probs_cos, exact.probs_sin)

    _emit_json({
        'dim': rho.dim,
        'diagonal': rho.diagonal.tolist(),
        'trace': rho.trace,
        'spectrum': [{'eigenvalue': ev, 'index': idx} for ev, idx in spectrum(rho)],
        'expectation': {'re': value.real, 'im': value.imag},
    })
    return EXIT_OK


def cmd_double_slit(args) -> int:
    """Phase scan of the two-slit intensity and its circuit analogue, as CSV"""
    try:
        cfg = SlitConfig(args.A, args.B, phase_b=args.phase_b)
        rows = phase_scan(cfg, args.steps)
    except (InputError, InvalidState) as e:
        raise ConfigError(str(e)) from e

    frame = scan_frame(rows)
    frame.to_csv(sys.stdout, index=False)
    if args.plot:
        plot_scan(frame, args.plot)
    return EXIT_OK


def cmd_pack(args) -> int:
    """Convert a 2N-dim real embedding to N-dim complex, or back"""
    v = load_embedding(args.file)
    if args.direction == "to-complex":
        if not isinstance(v, RealEmbedding):
            raise EmbeddingFormatError("to-complex expects a real embedding")
        out = pack_real_to_complex(v)
    else:
        if not isinstance(v, ComplexEmbedding):
            raise EmbeddingFormatError("to-real expects a complex embedding")
        out = unpack_complex_to_real(v)

    print(dump_embedding(out))
    return EXIT_OK


def cmd_sweep(args) -> int:
    """Seeded repetitions of the sampled estimate (spread or mitigation study)"""
    cfg = RunConfig(
        mode="shots",
        shots=args.shots,
        seed=args.seed,
        noise_flip=args.noise_flip,
        mitigate=args.mitigate,
        calibration_flip=args.calibration_flip,
    ).validate()
    if args.runs < 1:
        raise ConfigError(f"--runs must be >= 1, got {args.runs}")

    a, b = _load_pair(args.file_a, args.file_b, args.truncate)
    experiment = SimilarityExperiment(a, b)
    seeds = [cfg.seed + i for i in range(args.runs)]

    if args.study == "mitigation":
        if cfg.noise is None:
            raise ConfigError("--study mitigation needs --noise-flip > 0")
        results = experiment.mitigation_study(cfg.shots, seeds, cfg.noise, cfg.calibration, progress=args.progress)
    else:
        results = experiment.run_seed_sweep(cfg.shots, seeds, cfg.noise, cfg.mitigate, cfg.calibration,
                                            sigma=args.sigma, progress=args.progress)

    if args.export:
        results['exported_files'] = experiment.export_results(results, args.export)

    _emit_json(results)
    return EXIT_OK


def cmd_synth(args) -> int:
    """Write a seeded synthetic real embedding pair as two JSON files"""
    a, b = generate_pair(args.dim, args.similarity, args.seed)
    out_dir = Path(args.out_dir)
    path_a = save_embedding(a, out_dir / f"synthetic_{args.dim}_a.json")
    path_b = save_embedding(b, out_dir / f"synthetic_{args.dim}_b.json")

    _emit_json({'a': str(path_a), 'b': str(path_b), 'dim': args.dim, 'similarity': args.similarity, 'seed': args.seed})
    return EXIT_OK


def _add_run_flags(parser: argparse.ArgumentParser, with_mode: bool = True):
    if with_mode:
        parser.add_argument('--mode', choices=['exact', 'shots'], default='exact')
    parser.add_argument('--shots', type=int, default=Config.DEFAULT_SHOTS)
    parser.add_argument('--seed', type=int, default=Config.DEFAULT_SEED)
    parser.add_argument('--noise-flip', type=float, default=Config.DEFAULT_NOISE_FLIP)
    parser.add_argument('--mitigate', action='store_true', help='Invert the readout flip before reconstruction')
    parser.add_argument('--calibration-flip', type=float, default=None,
                        help='Flip probability used for mitigation (defaults to --noise-flip)')
    parser.add_argument('--truncate', type=int, default=None, help='Keep the first K components, then renormalize')


def build_parser() -> argparse.ArgumentParser:
    parser = CLIArgumentParser(
        prog='qcosine',
        description='Complex cosine similarity via single-qubit interference circuits',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest='command', parser_class=CLIArgumentParser)
    subparsers.required = True

    sim = subparsers.add_parser('similarity', help='Classical vs circuit similarity of two embedding files')
    sim.add_argument('file_a')
    sim.add_argument('file_b')
    _add_run_flags(sim)
    sim.add_argument('--output', choices=['json', 'csv'], default='json')
    sim.set_defaults(handler=cmd_similarity)

    analyze = subparsers.add_parser('analyze', help='Density matrix of an embedding pair')
    analyze.add_argument('file_a')
    analyze.add_argument('file_b')
    analyze.add_argument('--truncate', type=int, default=None)
    analyze.set_defaults(handler=cmd_analyze)

    slit = subparsers.add_parser('double-slit', help='Two-slit intensity scan and circuit analogue (CSV)')
    slit.add_argument('--A', type=float, required=True)
    slit.add_argument('--B', type=float, required=True)
    slit.add_argument('--phase-b', type=float, default=0.0)
    slit.add_argument('--steps', type=int, default=101)
    slit.add_argument('--plot', default=None, help='Also write an HTML figure to this path')
    slit.set_defaults(handler=cmd_double_slit)

    pack = subparsers.add_parser('pack', help='Real <-> complex embedding packing')
    pack.add_argument('file')
    pack.add_argument('--direction', choices=['to-complex', 'to-real'], required=True)
    pack.set_defaults(handler=cmd_pack)

    sweep = subparsers.add_parser('sweep', help='Seeded repetitions of the sampled estimate')
    sweep.add_argument('file_a')
    sweep.add_argument('file_b')
    _add_run_flags(sweep, with_mode=False)
    sweep.add_argument('--runs', type=int, default=20)
    sweep.add_argument('--study', choices=['spread', 'mitigation'], default='spread')
    sweep.add_argument('--sigma', type=float, default=4.0)
    sweep.add_argument('--export', default=None, help='Directory for JSON result files')
    sweep.add_argument('--progress', action='store_true')
    sweep.set_defaults(handler=cmd_sweep)

    synth = subparsers.add_parser('synth', help='Write a seeded synthetic embedding pair')
    synth.add_argument('--dim', type=int, default=Config.SYNTHETIC_DIM)
    synth.add_argument('--similarity', type=float, default=Config.SYNTHETIC_SIMILARITY)
    synth.add_argument('--seed', type=int, default=Config.SYNTHETIC_SEED)
    synth.add_argument('--out-dir', default=str(Config.FIXTURES_DIR))
    synth.set_defaults(handler=cmd_synth)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    setup_production_logging()

    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except ConfigError as e:
        ProductionLogger.log_error(e, "configuration")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (InputError, InvalidState) as e:
        ProductionLogger.log_error(e, "input")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
