"""
floquet 패키지 테스트 - 준에너지, 주기 위상, 정규 영역 조정
"""

import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import special

from numerics import NoRootInBracketError, ResonanceMismatchError
from floquet import (
    TrainSpec,
    classify_regime,
    floquet_time_series,
    gamma_n,
    p2_train_identical,
    periodicity_defect,
    phi_n,
    qes_states,
    quasienergy,
    total_phase,
    tune_to_regular,
)
from pulses import DriveField, QubitConfig
from resonance import ResonanceOrder, rwa_time_series

QUBIT = QubitConfig(epsilon0=1.0, delta=0.3)
FIRST = ResonanceOrder(order=1)
OMEGA = 1.0


def first_order_train(amplitude=0.315):
    return TrainSpec(amplitude=amplitude, width=20.0, period=60.0, resonance=FIRST)


@pytest.fixture(scope="module")
def tuned_train():
    return tune_to_regular(first_order_train(), QUBIT, OMEGA, 1, "amplitude", (0.2, 0.4))


def test_gamma_is_mean_of_single_pulse_area():
    train = first_order_train()
    area, _ = sp_integrate.quad(
        lambda s: special.jv(1, 0.63 * math.exp(-(s / 20.0) ** 2)), -120.0, 120.0, epsabs=1e-13, epsrel=1e-13,
    )
    assert gamma_n(train, OMEGA) == pytest.approx(area / 60.0, abs=1e-11)


def test_quasienergy_first_order_caption_values():
    result = quasienergy(first_order_train(), QUBIT, OMEGA)
    assert result.e_n * 60.0 == pytest.approx(3.2552, abs=2e-3)
    assert abs(result.e_n * 60.0 - math.pi) <= 0.05 * math.pi
    assert result.e_plus == -result.e_minus == result.e_n
    assert result.real_energies == pytest.approx((-0.5 + result.e_n, 0.5 - result.e_n))


def test_quasienergy_second_order_overlapping_train():
    qubit = QubitConfig(epsilon0=1.0, delta=0.4)
    train = TrainSpec(
        amplitude=0.457, width=65.0, period=2.15 * 65.0, resonance=ResonanceOrder(order=2, tolerance=1.0),
    )
    assert not train.is_separated
    energy = quasienergy(train, qubit, OMEGA).e_n
    assert energy * train.period == pytest.approx(3.2388, abs=2e-3)


def test_quasienergy_requires_resonance():
    with pytest.raises(ResonanceMismatchError):
        quasienergy(first_order_train(), QUBIT, 0.5)


def test_zero_amplitude_is_degenerate():
    train = first_order_train(amplitude=0.0)
    assert quasienergy(train, QUBIT, OMEGA).e_n == 0.0
    assert classify_regime(train, QUBIT, OMEGA) == "degenerate"


def test_periodic_phase_vanishes_at_period_boundaries():
    train = first_order_train()
    assert phi_n(train, QUBIT, OMEGA, 0.0) == pytest.approx(0.0, abs=1e-14)
    assert phi_n(train, QUBIT, OMEGA, 60.0) == pytest.approx(0.0, abs=1e-12)
    t = np.array([5.0, 17.5, 44.0])
    assert np.allclose(phi_n(train, QUBIT, OMEGA, t), phi_n(train, QUBIT, OMEGA, t + 120.0), atol=1e-12)


def test_tuning_finds_regular_amplitude(tuned_train):
    energy = quasienergy(tuned_train, QUBIT, OMEGA).e_n
    assert abs(energy * tuned_train.period - math.pi) <= 1e-8
    assert tuned_train.amplitude == pytest.approx(0.3034, abs=2e-3)
    assert abs(tuned_train.amplitude - 0.315) / 0.315 <= 0.05


def test_regular_regime_repeats_every_period(tuned_train):
    assert periodicity_defect(tuned_train, QUBIT, OMEGA, n_periods=4, samples_per_period=100) <= 1e-6
    assert classify_regime(tuned_train, QUBIT, OMEGA) == "regular"
    assert classify_regime(first_order_train(), QUBIT, OMEGA) == "aperiodic"


def test_tuning_without_sign_change_raises():
    idle = QubitConfig(epsilon0=1.0, delta=0.0)
    with pytest.raises(NoRootInBracketError):
        tune_to_regular(first_order_train(), idle, OMEGA, 1, "amplitude", (0.2, 0.4))
    with pytest.raises(NoRootInBracketError):
        tune_to_regular(first_order_train(), QUBIT, OMEGA, 1, "amplitude", (0.01, 0.05))
    with pytest.raises(NoRootInBracketError):
        tune_to_regular(first_order_train(), QUBIT, OMEGA, 0, "amplitude", (0.2, 0.4))


def test_tuning_width():
    tuned = tune_to_regular(first_order_train(), QUBIT, OMEGA, 1, "width", (15.0, 25.0))
    energy = quasienergy(tuned, QUBIT, OMEGA).e_n
    assert abs(energy * tuned.period - math.pi) <= 1e-8


def test_floquet_series_matches_finite_train_rwa():
    train = first_order_train()
    n_periods = 3
    reach = train.neighbor_range().start
    drive = DriveField(
        omega=OMEGA,
        pulses=tuple(train.pulse(k) for k in range(reach, n_periods - reach)),
    )
    times = np.linspace(0.0, n_periods * train.period, 181)
    floquet = floquet_time_series(train, QUBIT, OMEGA, times)
    finite = rwa_time_series(QUBIT, drive, FIRST, times)
    assert np.allclose(floquet.p2, finite.p2, atol=1e-8)
    assert np.allclose(floquet.p2, p2_train_identical(train, QUBIT, OMEGA, times), atol=1e-12)
    assert np.allclose(floquet.extras["g_total"], total_phase(train, QUBIT, OMEGA, times), atol=1e-12)


def test_quasienergetic_states(tuned_train):
    states = qes_states(tuned_train, QUBIT, OMEGA, 25.0)
    assert abs(np.vdot(states.plus, states.minus)) <= 1e-14
    assert np.linalg.norm(states.plus) == pytest.approx(1.0)
    assert states.u_plus * states.u_minus == pytest.approx(1.0)

    at_period = qes_states(tuned_train, QUBIT, OMEGA, tuned_train.period)
    assert np.allclose(at_period.plus, -np.array([1.0, 1.0]) / math.sqrt(2), atol=1e-7)


def test_train_layout():
    train = first_order_train()
    assert train.pulse(0).center == 30.0
    assert train.pulse(-1).center == -30.0
    assert list(train.neighbor_range()) == [-3, -2, -1, 0, 1, 2, 3]
    drive = train.to_drive_field(OMEGA, 4)
    assert [p.center for p in drive.pulses] == [30.0, 90.0, 150.0, 210.0]


@pytest.mark.parametrize("order", [1, 2])
def test_quasienergy_bookkeeping_over_amplitude_sweep(order):
    resonance = ResonanceOrder(order=order, tolerance=1.0)
    energies = []
    for amplitude in np.linspace(0.05, 0.5, 100):
        train = TrainSpec(amplitude=float(amplitude), width=10.0, period=40.0, resonance=resonance)
        result = quasienergy(train, QUBIT, OMEGA)
        assert result.e_plus + result.e_minus == 0.0
        assert result.e1 + result.e2 == pytest.approx(QUBIT.epsilon1 + QUBIT.epsilon2, abs=1e-12)
        energies.append(result.e_n)
    assert np.all(np.diff(energies) > 0)


def _linear_fit_residual(xs, ys):
    slope, intercept = np.polyfit(xs, ys, 1)
    return float(np.max(np.abs(ys - (slope * xs + intercept)))) / float(np.ptp(ys))


def test_first_order_quasienergy_grows_linearly_with_amplitude():
    amplitudes = np.linspace(0.05, 0.5, 10)
    energies = np.array([
        quasienergy(TrainSpec(amplitude=float(a), width=10.0, period=40.0, resonance=FIRST), QUBIT, OMEGA).e_n
        for a in amplitudes
    ])
    assert np.all(np.diff(energies) > 0)
    assert _linear_fit_residual(amplitudes, energies) <= 0.05


@pytest.mark.parametrize("order", [1, 2])
def test_quasienergy_grows_linearly_with_width(order):
    qubit = QubitConfig(epsilon0=float(order), delta=0.4)
    resonance = ResonanceOrder(order=order, tolerance=1.0)
    widths = np.linspace(2.0, 10.0, 9)
    energies = np.array([
        quasienergy(TrainSpec(amplitude=0.38, width=float(w), period=40.0, resonance=resonance), qubit, OMEGA).e_n
        for w in widths
    ])
    assert np.all(np.diff(energies) > 0)
    assert _linear_fit_residual(widths, energies) <= 0.05


def test_caption_amplitude_sits_off_the_regular_point(tuned_train):
    caption = quasienergy(first_order_train(), QUBIT, OMEGA).e_n * 60.0
    relative = (0.315 - tuned_train.amplitude) / 0.315
    assert caption > math.pi
    assert 0.03 < relative < 0.045
