"""
multiqubit 패키지 테스트 - 두 큐비트 Furry 해밀토니안과 전파
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import linalg

from multiqubit import (
    BASIS_LABELS,
    FourState,
    TwoQubitConfig,
    frame_phases,
    furry_hamiltonian_2q,
    lab_hamiltonian_2q,
    marginal_populations,
    pauli_conjugation,
    propagate_2q_magnus1,
    propagate_oracle_2q,
    tunneling_operator,
)
from numerics import SIGMA_X, SIGMA_Y, SIGMA_Z, DomainError, is_hermitian
from propagator import furry_hamiltonian, propagate_oracle
from pulses import DriveField, PulseEnvelope, QubitConfig, lambda_exact


def pulsed_drive(center=30.0):
    return DriveField(omega=1.0, pulses=(PulseEnvelope(amplitude=0.19, center=center, width=10.0),))


def config(delta1=0.1, delta2=0.1, coupling=0.05, drive2=None):
    return TwoQubitConfig(
        qubit1=QubitConfig(epsilon0=1.0, delta=delta1),
        drive1=pulsed_drive(),
        qubit2=QubitConfig(epsilon0=1.3, delta=delta2),
        drive2=drive2 or DriveField(omega=1.0),
        coupling=coupling,
    )


@given(alpha=st.floats(min_value=-4.0, max_value=4.0))
def test_pauli_conjugation_matches_matrix_exponential(alpha):
    rotate = linalg.expm(1j * alpha * SIGMA_Z)
    undo = linalg.expm(-1j * alpha * SIGMA_Z)
    assert np.allclose(pauli_conjugation(alpha, "x"), rotate @ SIGMA_X @ undo, atol=1e-12)
    assert np.allclose(pauli_conjugation(alpha, "y"), rotate @ SIGMA_Y @ undo, atol=1e-12)


def test_pauli_conjugation_rejects_axis():
    with pytest.raises(DomainError):
        pauli_conjugation(0.1, "z")


def test_furry_hamiltonian_is_frame_conjugation():
    cfg = config()
    t = 27.0
    lam1 = lambda_exact(cfg.qubit1, cfg.drive1, t)
    lam2 = lambda_exact(cfg.qubit2, cfg.drive2, t)
    frame = np.diag(frame_phases(lam1, lam2, cfg.coupling * t))
    expected = linalg.expm(-1j * frame) @ tunneling_operator(0.1, 0.1) @ linalg.expm(1j * frame)

    h = furry_hamiltonian_2q(cfg, t)
    assert np.allclose(h, expected, atol=1e-10)
    assert is_hermitian(h)
    assert np.allclose(np.diag(h), 0.0)
    assert np.count_nonzero(np.abs(h) > 1e-14) == 8


def test_single_qubit_block_reduces_to_one_qubit_furry_form():
    cfg = config(delta2=0.0, coupling=0.0)
    t = 41.0
    h = furry_hamiltonian_2q(cfg, t)
    single = furry_hamiltonian(cfg.qubit1, lambda_exact(cfg.qubit1, cfg.drive1, t))
    # |11⟩ ↔ |21⟩ 성분이 단일 큐비트 |1⟩ ↔ |2⟩ 성분
    assert h[0, 2] == pytest.approx(single[0, 1], abs=1e-10)
    assert h[2, 0] == pytest.approx(single[1, 0], abs=1e-10)


def test_lab_hamiltonian_coupling_sign():
    idle = DriveField(omega=1.0)
    cfg = TwoQubitConfig(
        qubit1=QubitConfig(epsilon0=1.0, delta=0.0),
        drive1=idle,
        qubit2=QubitConfig(epsilon0=1.3, delta=0.0),
        drive2=idle,
        coupling=0.05,
    )
    h = lab_hamiltonian_2q(cfg)(3.0)
    assert np.allclose(np.diag(h).real, [-1.1, 0.1, -0.2, 1.2], atol=1e-14)


def test_stepwise_magnus_tracks_oracle():
    cfg = config()
    times = np.linspace(0.0, 60.0, 2401)
    magnus = propagate_2q_magnus1(cfg, times)
    oracle = propagate_oracle_2q(cfg, times)
    assert np.max(np.abs(magnus.populations - oracle.populations)) <= 1e-3
    assert magnus.extras["norm_drift"] <= 1e-10


def test_global_and_stepwise_agree_on_single_interval():
    cfg = config()
    stepwise = propagate_2q_magnus1(cfg, [0.0, 20.0], stepwise=True)
    global_form = propagate_2q_magnus1(cfg, [0.0, 20.0], stepwise=False)
    assert np.allclose(stepwise.states, global_form.states, atol=1e-12)


def test_coupling_phase_matches_oracle_without_tunneling():
    cfg = config(delta1=0.0, delta2=0.0, coupling=0.07)
    initial = FourState(np.full(4, 0.5, dtype=complex))
    times = np.linspace(0.0, 50.0, 11)
    magnus = propagate_2q_magnus1(cfg, times, initial)
    oracle = propagate_oracle_2q(cfg, times, initial)
    assert np.allclose(magnus.states, oracle.states, atol=1e-8)
    assert np.allclose(magnus.populations, 0.25, atol=1e-12)


def test_uncoupled_qubit_follows_single_qubit_oracle():
    cfg = config(delta2=0.0, coupling=0.0)
    times = np.linspace(0.0, 60.0, 2401)
    series = propagate_2q_magnus1(cfg, times)
    q1, q2 = marginal_populations(series)
    single = propagate_oracle(cfg.qubit1, cfg.drive1, times)
    assert np.max(np.abs(q1 - single.p2)) <= 1e-3
    assert np.allclose(q2, 0.0, atol=1e-14)


def test_marginals_and_basis_states():
    cfg = config()
    series = propagate_2q_magnus1(cfg, np.linspace(0.0, 30.0, 301), FourState.basis("12"))
    pops = series.populations
    q1, q2 = marginal_populations(series)
    assert np.allclose(pops.sum(axis=1), 1.0, atol=1e-10)
    assert np.allclose(q1, pops[:, BASIS_LABELS.index("21")] + pops[:, BASIS_LABELS.index("22")])
    assert q2[0] == pytest.approx(1.0)


def test_four_state_validation():
    state = FourState.from_pairs([[0.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.0, 0.0]])
    assert state.amplitudes[1] == 1j
    with pytest.raises(DomainError):
        FourState(np.ones(4))
    with pytest.raises(DomainError):
        FourState(np.array([1.0, 0.0]))
    with pytest.raises(DomainError):
        propagate_2q_magnus1(config(), [3.0, 1.0])
