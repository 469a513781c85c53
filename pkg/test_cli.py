#!/usr/bin/env python3
"""Test the qcosine command line: subcommands, output formats and exit codes"""

import io
import json

import pandas as pd
import pytest

from main import EXIT_CONFIG, EXIT_INPUT, EXIT_OK, main
from src.embedding.io import save_embedding
from src.embedding.vectors import RealEmbedding
from src.utils.exceptions import InvalidState


@pytest.fixture
def files(tmp_path, fixtures_dir):
    real_a = save_embedding(RealEmbedding([0.6, 0.8, 0.0, 0.0]), tmp_path / "real_a.json")
    real_b = save_embedding(RealEmbedding([0.0, 1.0, 0.0, 0.0]), tmp_path / "real_b.json")
    short = save_embedding(RealEmbedding([1.0, 0.0, 0.0]), tmp_path / "short.json")
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "real", "values": "nope"}')
    return {
        'dog': str(fixtures_dir / "dog.json"),
        'cat': str(fixtures_dir / "cat.json"),
        'real_a': str(real_a),
        'real_b': str(real_b),
        'short': str(short),
        'bad': str(bad),
    }


def _run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_similarity_exact_json(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['dog'], files['cat']])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['dim'] == 2
    assert payload['classical']['re'] == pytest.approx(0.8806, abs=5e-4)
    assert payload['classical']['im'] == pytest.approx(-0.3451, abs=5e-4)
    assert payload['quantum']['method'] == 'quantum_exact'
    assert payload['magnitude'] == pytest.approx(0.9458, abs=5e-5)
    assert payload['delta'] <= 1e-12


def test_similarity_shots_is_deterministic(capsys, files):
    argv = ['similarity', files['dog'], files['cat'], '--mode', 'shots', '--shots', '2048', '--seed', '5']
    code, first, _ = _run(capsys, argv)
    assert code == EXIT_OK
    _, second, _ = _run(capsys, argv)
    assert first == second
    quantum = json.loads(first)['quantum']
    assert quantum['shots'] == 2048 and quantum['seed'] == 5
    assert quantum['stderr_re'] > 0


def test_similarity_real_inputs(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['real_a'], files['real_b']])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['quantum']['re'] == pytest.approx(0.8, abs=1e-12)
    assert payload['quantum']['im'] == 0.0


def test_similarity_csv(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['dog'], files['cat'], '--output', 'csv'])
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ['index', 'c_squared', 'contribution_re', 'contribution_im', 'p0_cos', 'p0_sin']
    assert len(frame) == 2
    assert frame['contribution_re'].sum() == pytest.approx(0.8806, abs=5e-4)
    assert frame['p0_cos'].tolist() == pytest.approx([0.971, 0.932], abs=5e-4)


def test_similarity_truncate(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['real_a'], files['real_b'], '--truncate', '2'])
    assert code == EXIT_OK
    assert json.loads(out)['dim'] == 2


def test_similarity_exact_noise_with_mitigation(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['dog'], files['cat'], '--noise-flip', '0.05', '--mitigate'])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['quantum']['mitigated'] is True
    assert payload['delta'] <= 1e-12


@pytest.mark.parametrize("extra", [
    ['--mode', 'shots', '--shots', '0'],
    ['--noise-flip', '0.5'],
    ['--mitigate'],
    ['--mode', 'fast'],
    ['--shots', 'many'],
])
def test_similarity_config_errors(capsys, files, extra):
    code, out, err = _run(capsys, ['similarity', files['dog'], files['cat'], *extra])
    assert code == EXIT_CONFIG
    assert out == ''
    assert err.startswith('error:')


def test_missing_subcommand_is_config_error(capsys):
    code, _, err = _run(capsys, [])
    assert code == EXIT_CONFIG
    assert 'error:' in err


@pytest.mark.parametrize("pair", [('bad', 'cat'), ('dog', 'short'), ('dog', 'missing')])
def test_similarity_input_errors(capsys, files, tmp_path, pair):
    paths = [files.get(name, str(tmp_path / f"{name}.json")) for name in pair]
    code, out, err = _run(capsys, ['similarity', *paths])
    assert code == EXIT_INPUT
    assert out == ''
    assert err.startswith('error:')


def test_similarity_subnormal_component(capsys, tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text('{"kind": "real", "values": [1.0, 1e-320]}')
    code, out, _ = _run(capsys, ['similarity', str(path), str(path)])
    assert code == EXIT_OK
    assert json.loads(out)['quantum']['re'] == pytest.approx(1.0, abs=1e-12)


def test_invalid_state_is_input_error(capsys, files, monkeypatch):
    def broken(*args, **kwargs):
        raise InvalidState("qubit amplitudes are not normalized")

    monkeypatch.setattr("main.quantum_similarity_real", broken)
    code, out, err = _run(capsys, ['similarity', files['real_a'], files['real_b']])
    assert code == EXIT_INPUT
    assert out == ''
    assert 'not normalized' in err


def test_analyze(capsys, files):
    code, out, _ = _run(capsys, ['analyze', files['dog'], files['cat']])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['diagonal'] == pytest.approx([0.205, 0.795], abs=5e-4)
    assert payload['trace'] == pytest.approx(1.0, abs=1e-12)
    assert [s['index'] for s in payload['spectrum']] == [1, 0]
    assert payload['expectation']['re'] == pytest.approx(0.8806, abs=5e-4)
    assert payload['expectation']['im'] == pytest.approx(-0.3451, abs=5e-4)


def test_double_slit_three_steps(capsys):
    code, out, _ = _run(capsys, ['double-slit', '--A', '0.7071', '--B', '0.7071', '--steps', '3'])
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ['delta_phase', 'intensity', 'p0', 'p1']
    assert len(frame) == 3
    assert frame['p0'].tolist() == pytest.approx([0.0, 1.0, 0.0], abs=1e-9)
    assert frame['intensity'][1] == pytest.approx(4 * 0.7071 ** 2)


def test_double_slit_scan_depends_only_on_phase_difference(capsys):
    base = ['double-slit', '--A', '0.6', '--B', '0.8', '--steps', '7']
    code, zero, _ = _run(capsys, base)
    assert code == EXIT_OK
    code, shifted, _ = _run(capsys, [*base, '--phase-b', '1.3'])
    assert code == EXIT_OK
    a, b = pd.read_csv(io.StringIO(zero)), pd.read_csv(io.StringIO(shifted))
    assert b['intensity'].tolist() == pytest.approx(a['intensity'].tolist(), abs=1e-12)
    assert b['p0'].tolist() == pytest.approx(a['p0'].tolist(), abs=1e-12)


def test_double_slit_plot(capsys, tmp_path):
    target = tmp_path / "scan.html"
    code, _, _ = _run(capsys, ['double-slit', '--A', '0.6', '--B', '0.8', '--steps', '5', '--plot', str(target)])
    assert code == EXIT_OK
    assert target.exists()


@pytest.mark.parametrize("argv", [
    ['double-slit', '--A', '0.6', '--B', '0.8', '--steps', '1'],
    ['double-slit', '--A', '-0.6', '--B', '0.8'],
    ['double-slit', '--A', '0.6'],
])
def test_double_slit_config_errors(capsys, argv):
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_CONFIG
    assert out == ''


def test_pack_roundtrip(capsys, tmp_path, files):
    code, out, _ = _run(capsys, ['pack', files['real_a'], '--direction', 'to-complex'])
    assert code == EXIT_OK
    packed = json.loads(out)
    assert packed['kind'] == 'complex' and len(packed['values']) == 2
    assert packed['values'][0][0] == pytest.approx(1.0)

    packed_file = tmp_path / "packed.json"
    packed_file.write_text(out)
    code, out, _ = _run(capsys, ['pack', str(packed_file), '--direction', 'to-real'])
    assert code == EXIT_OK
    assert json.loads(out)['values'] == pytest.approx([0.6, 0.8, 0.0, 0.0], abs=1e-12)


def test_pack_wrong_kind(capsys, files):
    code, _, _ = _run(capsys, ['pack', files['dog'], '--direction', 'to-complex'])
    assert code == EXIT_INPUT


def test_sweep_spread(capsys, files, tmp_path):
    export_dir = tmp_path / "results"
    code, out, _ = _run(capsys, ['sweep', files['dog'], files['cat'], '--shots', '1024', '--runs', '5',
                                 '--seed', '100', '--export', str(export_dir)])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [r['seed'] for r in payload['runs']] == [100, 101, 102, 103, 104]
    assert payload['metadata']['n_runs'] == 5
    assert (export_dir / "sweep_summary.json").exists()
    assert (export_dir / "sweep_runs.json").exists()


def test_sweep_mitigation_needs_noise(capsys, files):
    code, _, _ = _run(capsys, ['sweep', files['dog'], files['cat'], '--study', 'mitigation', '--runs', '2'])
    assert code == EXIT_CONFIG


def test_sweep_rejects_zero_runs(capsys, files):
    code, _, _ = _run(capsys, ['sweep', files['dog'], files['cat'], '--runs', '0'])
    assert code == EXIT_CONFIG


def test_synth_writes_pair(capsys, tmp_path):
    code, out, _ = _run(capsys, ['synth', '--dim', '16', '--similarity', '0.5', '--seed', '3',
                                 '--out-dir', str(tmp_path)])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (tmp_path / "synthetic_16_a.json").exists()
    code, out, _ = _run(capsys, ['similarity', payload['a'], payload['b']])
    assert json.loads(out)['classical']['re'] == pytest.approx(0.5, abs=1e-12)


def test_synth_bad_similarity(capsys, tmp_path):
    code, _, _ = _run(capsys, ['synth', '--similarity', '1.5', '--out-dir', str(tmp_path)])
    assert code == EXIT_CONFIG


def test_identical_files(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['cat'], files['cat']])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['classical']['re'] == pytest.approx(1.0, abs=1e-12)
    assert payload['delta'] < 1e-10


def test_similarity_ten_thousand_shots(capsys, files):
    code, out, _ = _run(capsys, ['similarity', files['dog'], files['cat'], '--mode', 'shots',
                                 '--shots', '10000', '--seed', '7'])
    assert code == EXIT_OK
    payload = json.loads(out)
    quantum, classical = payload['quantum'], payload['classical']
    assert abs(quantum['re'] - classical['re']) <= 4 * quantum['stderr_re']
    assert abs(quantum['im'] - classical['im']) <= 4 * quantum['stderr_im']


def test_analyze_dimension_mismatch(capsys, files):
    code, _, _ = _run(capsys, ['analyze', files['dog'], files['short']])
    assert code == EXIT_INPUT


def test_pack_odd_dimension(capsys, files):
    code, out, _ = _run(capsys, ['pack', files['short'], '--direction', 'to-complex'])
    assert code == EXIT_INPUT
    assert out == ''


def test_double_slit_full_scan(capsys):
    code, out, _ = _run(capsys, ['double-slit', '--A', '0.6', '--B', '0.8', '--steps', '101'])
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert len(frame) == 101
    assert (frame['p0'] + frame['p1']).tolist() == pytest.approx([1.0] * 101, abs=1e-12)
