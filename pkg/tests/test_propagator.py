"""
propagator 패키지 테스트 - Magnus 회전 벡터, 진폭 궤적, ODE 오라클
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import linalg
from scipy.integrate import cumulative_trapezoid, trapezoid

from numerics import SIGMA_MINUS, SIGMA_PLUS, SIGMA_X, SIGMA_Y, SIGMA_Z, DomainError, pauli_vector
from propagator import (
    DEFAULT_RESTART_AREA,
    GVector,
    QubitState,
    TimeSeries,
    furry_hamiltonian,
    g_vector,
    lab_hamiltonian,
    magnus_third_correction,
    propagate_magnus,
    propagate_oracle,
    restart_points,
    rotation_matrix,
    rotation_vector_of,
    su2_matrices,
)
from pulses import DriveField, PulseEnvelope, QubitConfig, g_of_t


def resonant_drive(amplitude=0.19, width=10.0):
    return DriveField(
        omega=1.0,
        pulses=(PulseEnvelope(amplitude=amplitude, center=6 * width, width=width),),
    )


def fine_rotation_vector(qubit, drive, t_end, n=60001):
    """사다리꼴 규칙으로 G₁, G₂ 직접 계산"""
    t = np.linspace(0.0, t_end, n)
    lam = cumulative_trapezoid(g_of_t(qubit, drive, t), t, initial=0.0)
    kappa = qubit.delta * np.exp(2j * lam)
    u, v = kappa.real, kappa.imag
    big_u = cumulative_trapezoid(u, t, initial=0.0)
    big_v = cumulative_trapezoid(v, t, initial=0.0)
    return trapezoid(u, t), trapezoid(v, t), trapezoid(u * big_v - v * big_u, t)


def test_zero_tunneling_gives_no_transition():
    qubit = QubitConfig(epsilon0=1.0, delta=0.0)
    times = np.linspace(0.0, 120.0, 121)
    series = propagate_magnus(qubit, resonant_drive(), times)
    assert np.all(series.p2 == 0.0)
    assert np.allclose(np.abs(series.c1), 1.0, atol=1e-14)


def test_rotation_vector_matches_trapezoid_reference():
    qubit = QubitConfig(epsilon0=1.0, delta=0.3)
    drive = resonant_drive()
    g = g_vector(qubit, drive, 60.0, order=2)
    gx, gy, gz = fine_rotation_vector(qubit, drive, 60.0)
    assert g.gx == pytest.approx(gx, abs=1e-5)
    assert g.gy == pytest.approx(gy, abs=1e-5)
    assert g.gz == pytest.approx(gz, abs=1e-5)
    assert g_vector(qubit, drive, 60.0, order=1).gz == 0.0


def test_g_vector_agrees_with_series_end_point():
    qubit = QubitConfig(epsilon0=1.0, delta=0.3)
    drive = resonant_drive()
    series = propagate_magnus(qubit, drive, np.linspace(0.0, 90.0, 91), order=2)
    g = g_vector(qubit, drive, 90.0, order=2)
    assert series.extras["gx"][-1] == pytest.approx(g.gx, abs=1e-10)
    assert series.extras["gz"][-1] == pytest.approx(g.gz, abs=1e-10)


def test_magnus_orders_converge_for_static_hamiltonian():
    # 펄스 없는 구동: 실험실 해밀토니안이 상수라 정확해가 행렬 지수
    qubit = QubitConfig(epsilon0=1.0, delta=0.02)
    drive = DriveField(omega=1.0)
    t = 2.0
    hamiltonian = -0.5 * SIGMA_Z + 0.02 * SIGMA_X
    exact = linalg.expm(-1j * hamiltonian * t) @ np.array([1.0, 0.0])

    errors = []
    for order in (1, 2, 3):
        series = propagate_magnus(qubit, drive, [t], order=order)
        errors.append(abs(series.c1[0] - exact[0]) + abs(series.c2[0] - exact[1]))
    assert errors[2] < errors[1] < errors[0]
    assert errors[2] < 1e-5


def test_third_correction_is_difference_of_orders():
    qubit = QubitConfig(epsilon0=1.0, delta=0.1)
    drive = resonant_drive(width=5.0)
    correction = magnus_third_correction(qubit, drive, 40.0)
    third = g_vector(qubit, drive, 40.0, order=3)
    second = g_vector(qubit, drive, 40.0, order=2)
    assert correction.gx == pytest.approx(third.gx - second.gx, abs=1e-12)
    assert correction.gz == pytest.approx(third.gz - second.gz, abs=1e-12)


@given(st.lists(st.floats(min_value=-3.0, max_value=3.0), min_size=3, max_size=3))
def test_rotation_matrix_is_su2_exponential(g):
    matrix = rotation_matrix(g)
    expected = linalg.expm(-1j * pauli_vector(g))
    assert np.allclose(matrix, expected, atol=1e-12)
    assert np.allclose(matrix @ matrix.conj().T, np.eye(2), atol=1e-12)


def test_rotation_matrix_identity_at_zero():
    assert np.allclose(rotation_matrix([0.0, 0.0, 0.0]), np.eye(2))


@given(
    delta=st.floats(min_value=-0.5, max_value=0.5),
    amplitude=st.floats(min_value=0.0, max_value=0.5),
    phase=st.floats(min_value=-math.pi, max_value=math.pi),
    order=st.sampled_from([1, 2]),
)
def test_magnus_amplitudes_stay_normalised(delta, amplitude, phase, order):
    qubit = QubitConfig(epsilon0=1.0, delta=delta)
    drive = DriveField(
        omega=1.0,
        pulses=(PulseEnvelope(amplitude=amplitude, center=20.0, width=5.0, phase=phase),),
    )
    series = propagate_magnus(qubit, drive, np.linspace(0.0, 40.0, 21), order=order)
    assert series.norm_error <= 1e-12


@pytest.mark.parametrize("initial", [QubitState.ground(), QubitState(0j, 1.0 + 0j)], ids=["ground", "excited"])
def test_second_order_magnus_tracks_oracle_for_weak_tunneling(initial):
    qubit = QubitConfig(epsilon0=1.0, delta=0.02)
    drive = resonant_drive()
    times = np.linspace(0.0, 120.0, 241)
    magnus = propagate_magnus(qubit, drive, times, order=2, initial=initial)
    oracle = propagate_oracle(qubit, drive, times, initial=initial)
    assert np.max(np.abs(magnus.p2 - oracle.p2)) <= 2e-4
    assert oracle.extras["norm_drift"] <= 1e-9


def test_oracle_without_tunneling_only_accumulates_phase():
    qubit = QubitConfig(epsilon0=1.0, delta=0.0)
    drive = resonant_drive()
    initial = QubitState(1 / math.sqrt(2) + 0j, 1j / math.sqrt(2))
    times = np.array([0.0, 30.0, 75.0])
    series = propagate_oracle(qubit, drive, times, initial=initial)
    magnus = propagate_magnus(qubit, drive, times, initial=initial)
    assert np.allclose(series.p2, 0.5, atol=1e-9)
    assert np.allclose(series.c1, magnus.c1, atol=1e-8)
    assert np.allclose(series.c2, magnus.c2, atol=1e-8)


def test_lab_hamiltonian_is_hermitian_with_ground_first():
    qubit = QubitConfig(epsilon0=1.0, delta=0.3)
    h = lab_hamiltonian(qubit, resonant_drive())(60.0)
    assert np.allclose(h, h.conj().T)
    assert h[0, 0].real < h[1, 1].real
    assert h[0, 1] == pytest.approx(0.3)


def test_models():
    assert GVector(0.0, 0.0, 0.0).rho is None
    assert GVector(3.0, 0.0, 4.0).rho == pytest.approx((0.6, 0.0, 0.8))
    assert (GVector(1.0, 2.0, 3.0) + GVector(1.0, 1.0, 1.0)).as_array().tolist() == [2.0, 3.0, 4.0]
    with pytest.raises(DomainError):
        QubitState(1.0 + 0j, 1.0 + 0j)
    assert QubitState.from_pairs([[0.0, 0.0], [0.0, 1.0]]).c2 == 1j

    series = TimeSeries(
        times=np.array([0.0]),
        c1=np.array([math.sqrt(0.25) + 0j]),
        c2=np.array([math.sqrt(0.75) + 0j]),
    )
    assert series.inversion[0] == pytest.approx(0.5)


def test_grid_validation():
    qubit = QubitConfig(epsilon0=1.0, delta=0.3)
    with pytest.raises(DomainError):
        propagate_magnus(qubit, resonant_drive(), [5.0, 1.0])
    with pytest.raises(DomainError):
        g_vector(qubit, resonant_drive(), -1.0)


@pytest.mark.parametrize("lam", [0.0, 0.3, math.pi / 4, 2.0])
def test_furry_hamiltonian_ladder_form(lam):
    qubit = QubitConfig(epsilon0=1.0, delta=0.2)
    expected = 0.2 * (np.exp(-2j * lam) * SIGMA_PLUS + np.exp(2j * lam) * SIGMA_MINUS)
    assert np.allclose(furry_hamiltonian(qubit, lam), expected)


def test_furry_hamiltonian_quarter_phase_is_sigma_y():
    qubit = QubitConfig(epsilon0=1.0, delta=0.2)
    assert np.allclose(furry_hamiltonian(qubit, math.pi / 4), 0.2 * SIGMA_Y)


# ----------------------------------------------------------------------
# 재시작 Magnus
# ----------------------------------------------------------------------

OFF_RESONANT = QubitConfig(epsilon0=1.0, delta=0.45)
OFF_RESONANT_TIMES = np.linspace(0.0, 42.0, 801)


def off_resonant_drive(omega):
    return DriveField(omega=omega, pulses=(PulseEnvelope(amplitude=0.4, center=21.0, width=3.5),))


@pytest.fixture(scope="module")
def off_resonant_traces():
    traces = {}
    for omega in (0.5, 1.1, 1.5):
        drive = off_resonant_drive(omega)
        traces[omega] = {
            "oracle": propagate_oracle(OFF_RESONANT, drive, OFF_RESONANT_TIMES).p2,
            2: propagate_magnus(OFF_RESONANT, drive, OFF_RESONANT_TIMES, order=2,
                                restart_area=DEFAULT_RESTART_AREA).p2,
            3: propagate_magnus(OFF_RESONANT, drive, OFF_RESONANT_TIMES, order=3,
                                restart_area=DEFAULT_RESTART_AREA).p2,
        }
    return traces


@pytest.mark.parametrize("omega", [0.5, 1.1, 1.5])
def test_restarted_second_order_tracks_oracle_off_resonance(off_resonant_traces, omega):
    trace = off_resonant_traces[omega]
    assert np.max(np.abs(trace[2] - trace["oracle"])) <= 0.1
    assert np.max(np.abs(trace[3] - trace[2])) < 0.05


def test_off_resonant_peak_is_higher_above_splitting(off_resonant_traces):
    for method in ("oracle", 2):
        assert off_resonant_traces[1.5][method].max() > off_resonant_traces[0.5][method].max()


def test_restarted_free_precession_matches_rabi_formula():
    drive = DriveField(omega=1.0)
    times = np.linspace(0.0, 20.0, 201)
    series = propagate_magnus(OFF_RESONANT, drive, times, order=2, restart_area=0.02)
    gap = math.sqrt(1.0 + 4 * 0.45 ** 2)
    expected = (4 * 0.45 ** 2 / gap ** 2) * np.sin(gap * times / 2) ** 2
    assert np.max(np.abs(series.p2 - expected)) <= 1e-3
    assert series.norm_error <= 1e-12


def test_single_segment_restart_equals_global_series():
    drive = off_resonant_drive(1.5)
    times = np.linspace(0.0, 42.0, 85)
    restarted = propagate_magnus(OFF_RESONANT, drive, times, restart_area=100.0)
    direct = propagate_magnus(OFF_RESONANT, drive, times)
    assert np.array_equal(restarted.c1, direct.c1)
    assert np.array_equal(restarted.extras["gz"], direct.extras["gz"])


def test_restarted_rotation_vector_reproduces_amplitudes():
    drive = off_resonant_drive(1.1)
    times = np.linspace(0.0, 42.0, 43)
    series = propagate_magnus(OFF_RESONANT, drive, times, restart_area=DEFAULT_RESTART_AREA)
    g = np.stack([series.extras["gx"], series.extras["gy"], series.extras["gz"]], axis=1)
    assert np.all(np.linalg.norm(g, axis=1) <= math.pi + 1e-12)
    phi1 = su2_matrices(g)[:, 0, 0]
    assert np.allclose(np.abs(phi1), np.abs(series.c1), atol=1e-10)


@given(st.lists(st.floats(min_value=-1.5, max_value=1.5), min_size=3, max_size=3))
def test_rotation_vector_of_inverts_su2_exponential(g):
    matrices = su2_matrices(np.array([g]))
    assert np.allclose(matrices[0], linalg.expm(-1j * pauli_vector(g)), atol=1e-12)
    assert np.allclose(rotation_vector_of(matrices)[0], g, atol=1e-9)


def test_restart_points_layout():
    assert restart_points(0.45, 42.0, None).tolist() == [0.0, 42.0]
    assert restart_points(0.0, 42.0, 0.25).tolist() == [0.0, 42.0]
    points = restart_points(0.45, 42.0, 0.25)
    assert points.size - 1 == math.ceil(0.45 * 42.0 / 0.25)
    assert np.all(0.45 * np.diff(points) <= 0.25 + 1e-12)
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            restart_points(0.45, 42.0, bad)


@settings(deadline=None)
@given(
    delta=st.floats(min_value=-0.5, max_value=0.5),
    amplitude=st.floats(min_value=0.0, max_value=0.5),
    phase=st.floats(min_value=-math.pi, max_value=math.pi),
    omega=st.floats(min_value=0.5, max_value=1.5),
)
def test_oracle_stays_normalised_for_random_drives(delta, amplitude, phase, omega):
    qubit = QubitConfig(epsilon0=1.0, delta=delta)
    drive = DriveField(
        omega=omega,
        pulses=(PulseEnvelope(amplitude=amplitude, center=20.0, width=5.0, phase=phase),),
    )
    series = propagate_oracle(qubit, drive, np.linspace(0.0, 40.0, 21))
    assert series.extras["norm_drift"] <= 1e-9
    assert series.norm_error <= 3e-9
