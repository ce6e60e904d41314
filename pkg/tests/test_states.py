"""State factories and the Haar-random sampler."""

import math

import numpy as np
import pytest

from ccrkit import DensityOperator, PureState, ValidationError, density_from_pure, partial_trace, purity
from ccrkit.states import (
    FACTORY_PARAMS,
    acin,
    bipartite_x,
    build,
    five_term,
    ghz,
    haar_random_pure,
    qutrit_jb,
    w_state,
    werner_like,
)


def test_werner_fully_depolarized_is_maximally_mixed():
    assert np.allclose(werner_like(0.0, 0.9).matrix, np.eye(2) / 2)


def test_werner_valid_over_parameter_grid():
    for w in np.linspace(0, 1, 11):
        for x in np.linspace(0, 1, 11):
            rho = werner_like(w, x)  # constructor validates PSD/trace/hermiticity
            assert abs(np.trace(rho.matrix) - 1.0) < 1e-12


def test_werner_rejects_out_of_range():
    with pytest.raises(ValidationError, match="w"):
        werner_like(1.5, 0.5)
    with pytest.raises(ValidationError, match="x"):
        werner_like(0.5, -0.1)


def test_w_state_limit_p_one():
    psi = w_state(1.0)
    expected = np.zeros(8)
    expected[0b010] = expected[0b100] = 1 / math.sqrt(2)
    assert np.allclose(psi.amplitudes, expected)


def test_qutrit_limit_x_one():
    psi = qutrit_jb(1.0)
    expected = np.zeros(9)
    expected[0] = expected[4] = 1 / math.sqrt(2)
    assert np.allclose(psi.amplitudes, expected)


def test_bipartite_x_amplitude_layout():
    psi = bipartite_x(0.6)
    assert psi.amplitudes[0b01] == pytest.approx(0.6)
    assert psi.amplitudes[0b10] == pytest.approx(0.8)


def test_ghz_normalizes_amplitudes():
    psi = ghz(0.7071, 0.7071)
    probs = np.abs(psi.amplitudes) ** 2
    assert probs[0b000] + probs[0b111] == pytest.approx(1.0, abs=1e-12)
    assert probs[0b000] == pytest.approx(0.5, abs=1e-12)


def test_ghz_accepts_complex_amplitudes():
    psi = ghz(0.3 + 0.4j, 0.5 - 0.7j)
    assert abs(np.vdot(psi.amplitudes, psi.amplitudes) - 1.0) < 1e-12


def test_five_term_normalizes_and_requires_real():
    psi = five_term(1.0, 2.0, 3.0, 4.0, 5.0)
    assert abs(np.vdot(psi.amplitudes, psi.amplitudes) - 1.0) < 1e-12
    with pytest.raises(ValidationError, match="real"):
        five_term(1.0, 2.0j, 3.0, 4.0, 5.0)


def test_acin_accepts_complex_and_normalizes():
    psi = acin(1.0 + 1.0j, 2.0, 3.0 - 0.5j, 0.25j)
    assert abs(np.vdot(psi.amplitudes, psi.amplitudes) - 1.0) < 1e-12


def test_zero_amplitudes_rejected():
    with pytest.raises(ValidationError, match="zero"):
        ghz(0.0, 0.0)


def test_every_pure_factory_output_is_pure():
    pure_states = [
        bipartite_x(0.3),
        qutrit_jb(0.8),
        ghz(0.6, 0.8),
        w_state(0.5),
        five_term(1, 1, 1, 1, 1),
        acin(1, 1j, 1, -1),
    ]
    for psi in pure_states:
        assert abs(purity(density_from_pure(psi)) - 1.0) < 1e-12


# ---------------------------------------------------------------------------
# build() dispatch


def test_build_dispatch():
    assert isinstance(build("werner", w=0.5, x=0.5), DensityOperator)
    assert isinstance(build("ghz", a000=0.6, a111=0.8), PureState)
    assert set(FACTORY_PARAMS) == {"werner", "bipartite-x", "qutrit-jb", "ghz", "w", "five-term", "acin"}


def test_build_rejects_unknown_variant():
    with pytest.raises(ValidationError, match="unknown state variant"):
        build("bell")


def test_build_rejects_missing_and_extra_params():
    with pytest.raises(ValidationError, match="missing"):
        build("werner", w=0.5)
    with pytest.raises(ValidationError, match="unexpected"):
        build("w", p=0.5, x=0.1)


# ---------------------------------------------------------------------------
# Haar sampler


def test_haar_stream_deterministic_per_seed():
    first = [psi.amplitudes for psi in haar_random_pure((2, 2), 5, seed=99)]
    second = [psi.amplitudes for psi in haar_random_pure((2, 2), 5, seed=99)]
    for a, b in zip(first, second):
        assert np.array_equal(a, b)
    other = next(iter(haar_random_pure((2, 2), 1, seed=100)))
    assert not np.allclose(first[0], other.amplitudes)


def test_haar_states_normalized():
    for psi in haar_random_pure((2, 2), 1000, seed=5):
        norm_sq = float(np.vdot(psi.amplitudes, psi.amplitudes).real)
        assert abs(norm_sq - 1.0) < 1e-12


def test_haar_mean_reduced_linear_entropy():
    # Exact Haar average of 1 - Tr rho_A^2 for a (2, 2) split is
    # 1 - (d_A + d_B)/(d_A d_B + 1) = 1/5; Monte-Carlo with 1000 draws.
    total = 0.0
    count = 1000
    for psi in haar_random_pure((2, 2), count, seed=6):
        reduced = partial_trace(density_from_pure(psi), [0])
        total += 1.0 - float(np.vdot(reduced.matrix, reduced.matrix).real)
    assert abs(total / count - 0.2) < 0.02


def test_haar_rejects_bad_count():
    with pytest.raises(ValidationError, match="count"):
        list(haar_random_pure((2, 2), 0, seed=1))
