#!/usr/bin/env python3
"""Test the density-matrix view of the similarity estimate"""

import numpy as np
import pytest

from conftest import random_complex_unit
from src.analysis.density import DensityMatrix, density_matrix, expectation, spectrum
from src.embedding.vectors import RealEmbedding
from src.qsim.estimates import ProbEstimate
from src.qsim.sampler import ShotsMode
from src.similarity.cosine import classical_similarity, quantum_similarity
from src.utils.exceptions import DimensionMismatch, InputError


def test_dog_cat_density_matrix(dog, cat):
    rho = density_matrix(dog, cat)
    assert rho.diagonal == pytest.approx([0.205, 0.795], abs=5e-4)
    assert rho.trace == pytest.approx(1.0, abs=1e-12)
    assert rho.dim == 2


def test_spectrum_descending_with_indices(dog, cat):
    rho = density_matrix(dog, cat)
    eig = spectrum(rho)
    assert [i for _, i in eig] == [1, 0]
    assert eig[0][0] >= eig[1][0]
    assert rho.spectrum == eig


def test_spectrum_ties_keep_index_order():
    rho = DensityMatrix([0.25, 0.5, 0.25])
    assert spectrum(rho) == [(0.5, 1), (0.25, 0), (0.25, 2)]


def test_trace_is_one_for_unit_inputs(rng):
    for dim in (1, 5, 64):
        a = random_complex_unit(rng, dim)
        b = random_complex_unit(rng, dim)
        rho = density_matrix(a, b)
        assert rho.trace == pytest.approx(1.0, abs=1e-12)
        assert np.all(rho.diagonal >= 0)


def test_expectation_reproduces_similarity(dog, cat):
    rho = density_matrix(dog, cat)
    result = quantum_similarity(dog, cat)
    value = expectation(rho, result.probs_cos, result.probs_sin)
    assert value == pytest.approx(result.value, abs=1e-12)
    assert value == pytest.approx(classical_similarity(dog, cat).value, abs=1e-12)


def test_expectation_on_sampled_probabilities(dog, cat):
    result = quantum_similarity(dog, cat, ShotsMode(1024, 99))
    value = expectation(density_matrix(dog, cat), result.probs_cos, result.probs_sin)
    assert value == pytest.approx(result.value, abs=1e-12)


def test_expectation_skips_missing_qubits():
    a = RealEmbedding([0.6, 0.0, 0.8])
    b = RealEmbedding([0.0, 0.0, 1.0])
    rho = density_matrix(a, b)
    assert rho.diagonal[1] == 0.0
    result = quantum_similarity(a, b)
    assert expectation(rho, result.probs_cos, result.probs_sin) == pytest.approx(0.8 + 0j, abs=1e-12)


def test_expectation_length_mismatch():
    rho = DensityMatrix([0.5, 0.5])
    with pytest.raises(DimensionMismatch):
        expectation(rho, [ProbEstimate.exact(1.0)], [None, None])


def test_density_matrix_validation():
    with pytest.raises(InputError):
        DensityMatrix([0.5, -0.1])
    with pytest.raises(InputError):
        DensityMatrix([[0.5, 0.5]])
