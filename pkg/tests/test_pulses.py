"""
pulses 패키지 테스트 - 구동장 모델, g(t), Λ(t), 겹침 판정
"""

import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import trapezoid

from numerics import QuadratureSpec
from pulses import (
    DriveField,
    PulseEnvelope,
    QubitConfig,
    build_phase_table,
    g_of_t,
    lambda_adiabatic,
    lambda_exact,
    overlap_check,
    rotation_axis,
    warn_if_not_adiabatic,
)

QUBIT = QubitConfig(epsilon0=1.0, delta=0.3)


def single_pulse(amplitude=0.19, width=10.0, phase=0.0, omega=1.0):
    return DriveField(
        omega=omega,
        pulses=(PulseEnvelope(amplitude=amplitude, center=6 * width, width=width, phase=phase),),
    )


def pulse_train(count, spacing, width=10.0, amplitude=0.19):
    return DriveField(
        omega=1.0,
        pulses=tuple(
            PulseEnvelope(amplitude=amplitude, center=6 * width + k * spacing * width, width=width)
            for k in range(count)
        ),
    )


def test_qubit_levels_filled_from_epsilon0():
    qubit = QubitConfig(epsilon0=2.0, delta=0.1)
    assert (qubit.epsilon1, qubit.epsilon2) == (-1.0, 1.0)
    assert QubitConfig(epsilon0=1.0, delta=0.1, epsilon1=0.0).epsilon2 == 1.0
    with pytest.raises(ValidationError):
        QubitConfig(epsilon0=1.0, delta=0.1, epsilon1=0.0, epsilon2=3.0)
    with pytest.raises(ValidationError):
        QubitConfig(epsilon0=0.0, delta=0.1)


def test_drive_requires_ordered_centers():
    first = PulseEnvelope(amplitude=0.1, center=50.0, width=5.0)
    second = PulseEnvelope(amplitude=0.1, center=10.0, width=5.0)
    with pytest.raises(ValidationError):
        DriveField(omega=1.0, pulses=(first, second))
    with pytest.raises(ValidationError):
        PulseEnvelope(amplitude=-0.1, center=0.0, width=1.0)


def test_envelope_support_cutoff():
    pulse = PulseEnvelope(amplitude=0.5, center=0.0, width=2.0)
    assert pulse.envelope(2.0) == pytest.approx(0.5 * math.exp(-1.0))
    assert pulse.envelope(12.5) == 0.0
    assert pulse.support() == (-12.0, 12.0)

    box = PulseEnvelope(amplitude=0.5, center=0.0, width=2.0, shape="rectangular")
    assert box.envelope(0.9) == 0.5
    assert box.envelope(1.1) == 0.0


def test_g_of_t_at_one_width_from_center():
    drive = single_pulse(amplitude=0.19, phase=0.4)
    t = 70.0
    expected = 0.5 + 0.19 * math.exp(-1.0) * math.cos(t + 0.4)
    assert g_of_t(QUBIT, drive, t) == pytest.approx(expected, abs=1e-15)
    assert g_of_t(QUBIT, DriveField(omega=1.0), 3.0) == 0.5


def test_lambda_exact_scalar_matches_table_and_riemann_sum():
    drive = single_pulse()
    t = 120.0
    scalar = lambda_exact(QUBIT, drive, t)
    table = lambda_exact(QUBIT, drive, np.array([t / 2, t]))
    assert table[-1] == pytest.approx(scalar, abs=1e-9)

    fine = np.linspace(0.0, t, 400001)
    riemann = trapezoid(g_of_t(QUBIT, drive, fine), fine)
    assert scalar == pytest.approx(riemann, abs=1e-6)


def test_lambda_without_pulses_is_linear():
    drive = DriveField(omega=1.0)
    times = np.array([0.0, 1.0, 7.5])
    assert np.allclose(lambda_exact(QUBIT, drive, times), times / 2, atol=1e-14)


def test_lambda_adiabatic_close_to_exact_for_slow_envelope():
    drive = single_pulse()
    times = np.linspace(0.0, 120.0, 241)
    exact = lambda_exact(QUBIT, drive, times)
    adiabatic = lambda_adiabatic(QUBIT, drive, times)
    bound = 2 * 0.19 / (drive.omega * 10.0)
    assert np.max(np.abs(exact - adiabatic)) <= bound


def test_phase_table_boundaries_hold_requested_times():
    drive = single_pulse()
    times = np.array([10.0, 60.0, 110.0])
    table = build_phase_table(QUBIT, drive, times, QuadratureSpec())
    assert np.array_equal(table.grid.times, times)
    assert table.lam_nodes.shape == table.grid.nodes.shape


def test_overlap_check():
    assert overlap_check(pulse_train(2, spacing=6.0))
    assert overlap_check(pulse_train(6, spacing=4.0))
    assert not overlap_check(pulse_train(2, spacing=0.5))
    assert overlap_check(single_pulse())


def test_non_adiabatic_warning(caplog):
    with caplog.at_level(logging.WARNING):
        assert warn_if_not_adiabatic(single_pulse(width=1.0))
    assert "ωT < 2π" in caplog.text
    assert not warn_if_not_adiabatic(single_pulse(width=10.0))


def test_rotation_axis_is_unit_in_plane():
    axis, rate = rotation_axis(QUBIT, single_pulse(), 33.0)
    assert np.linalg.norm(axis) == pytest.approx(1.0)
    assert axis[2] == 0.0
    assert rate == pytest.approx(0.6)
