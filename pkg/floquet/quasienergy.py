"""
준에너지와 준에너지 상태

주기 피적분 함수 f(t) = Σ_k J_N(2A_k(t)/ω) (펄스별 Bessel 합)를 사용하므로
γ_N = (1/τ)∫_{−∞}^{∞} J_N(2A(t)/ω) dt 는 f의 주기 평균과 정확히 같습니다.

  G(t) = Δγ_N t + φ_N(t),  φ_N(t) = Δ∫₀ᵗ (f − γ_N),  P₂ = sin² G
"""

import logging
import math
from typing import Literal, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize

from numerics import NoRootInBracketError, NumericError, PanelGrid, QuadratureSpec, integrate
from propagator import QubitState, TimeSeries, apply_rotation
from pulses import PulseEnvelope, QubitConfig
from resonance import bessel_envelope

from .models import QuasienergeticStates, QuasienergyResult, TrainSpec

logger = logging.getLogger(__name__)

FreeParameter = Literal["amplitude", "period", "width"]
Regime = Literal["regular", "aperiodic", "degenerate"]

REGULAR_TOLERANCE = 1e-6


def _scalar_or_array(values: np.ndarray, t: ArrayLike):
    return float(values[0]) if np.ndim(t) == 0 else values


def gamma_n(train: TrainSpec, omega: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    γ_N = (1/τ) ∫_{−cT}^{cT} J_N(2A₀e^{−s²/T²}/ω) ds  (c = support_cutoff)
    """
    train.warn_if_overlapping()
    if train.amplitude == 0.0:
        return 0.0
    pulse = PulseEnvelope(amplitude=train.amplitude, center=0.0, width=train.width, phase=train.phase)
    reach = train.support_cutoff * train.width
    area = integrate(
        lambda s: bessel_envelope(pulse, train.order, omega, s, train.support_cutoff),
        -reach, reach, spec,
    )
    return area / train.period


def quasienergy(train: TrainSpec, qubit: QubitConfig, omega: float,
                spec: Optional[QuadratureSpec] = None) -> QuasienergyResult:
    """
    E_N = Δγ_N,  E⁺ = −E⁻ = E_N,  E₁N = ε₁ + E_N,  E₂N = ε₂ − E_N

    Raises:
        ResonanceMismatchError: ε₀ ≠ Nω
    """
    train.resonance.validate_for(qubit, omega)
    gamma = gamma_n(train, omega, spec)
    energy = qubit.delta * gamma
    return QuasienergyResult(
        gamma_n=gamma,
        e_n=energy,
        e_plus=energy,
        e_minus=-energy,
        e1=qubit.epsilon1 + energy,
        e2=qubit.epsilon2 - energy,
    )


def periodic_bessel(train: TrainSpec, omega: float, t: ArrayLike) -> np.ndarray:
    """f(t) = Σ_k J_N(2A_k(t)/ω), t는 기본 주기 [0, τ] 안의 값"""
    t = np.asarray(t, dtype=float)
    total = np.zeros(t.shape)
    for k in train.neighbor_range():
        total = total + bessel_envelope(train.pulse(k), train.order, omega, t, train.support_cutoff)
    return total


def phi_n(train: TrainSpec, qubit: QubitConfig, omega: float, t: ArrayLike,
          spec: Optional[QuadratureSpec] = None):
    """
    φ_N(t) = Δ∫₀^{t mod τ} (f − γ_N)  (주기 함수, φ_N(0) = φ_N(τ) = 0)
    """
    spec = spec or QuadratureSpec()
    tau = train.period
    reduced = np.mod(np.atleast_1d(np.asarray(t, dtype=float)), tau)
    width = min(train.width / 8, tau / 20)
    grid = PanelGrid.build(np.append(reduced, tau), width, spec.panel_nodes)
    running = grid.sample(grid.cumulative(periodic_bessel(train, omega, grid.nodes)).at_boundaries)
    mean = running[-1] / tau
    phase = qubit.delta * (running[:-1] - mean * reduced)
    return _scalar_or_array(phase, t)


def total_phase(train: TrainSpec, qubit: QubitConfig, omega: float, t: ArrayLike,
                spec: Optional[QuadratureSpec] = None):
    """G(t) = E_N t + φ_N(t)"""
    energy = quasienergy(train, qubit, omega, spec).e_n
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    values = energy * t_arr + np.atleast_1d(phi_n(train, qubit, omega, t_arr, spec))
    return _scalar_or_array(values, t)


def p2_train_identical(train: TrainSpec, qubit: QubitConfig, omega: float, t: ArrayLike,
                       spec: Optional[QuadratureSpec] = None):
    """P₂(t) = sin²(Δγ_N t + φ_N(t)), 바닥 상태 출발"""
    return np.sin(total_phase(train, qubit, omega, t, spec)) ** 2


def qes_states(train: TrainSpec, qubit: QubitConfig, omega: float, t: float,
               spec: Optional[QuadratureSpec] = None) -> QuasienergeticStates:
    """
    준에너지 상태 |Φ^±(t)⟩ = e^{∓i(E_N t + φ_N(t))} |±⟩,  |±⟩ = (|1⟩ ± |2⟩)/√2
    """
    energy = quasienergy(train, qubit, omega, spec).e_n
    phase = float(phi_n(train, qubit, omega, float(t), spec))
    angle = energy * t + phase
    basis_plus = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2)
    basis_minus = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2)
    return QuasienergeticStates(
        plus=np.exp(-1j * angle) * basis_plus,
        minus=np.exp(1j * angle) * basis_minus,
        u_plus=complex(np.exp(-1j * phase)),
        u_minus=complex(np.exp(1j * phase)),
    )


def tune_to_regular(
    train: TrainSpec,
    qubit: QubitConfig,
    omega: float,
    m: int,
    free_param: FreeParameter,
    bracket: tuple[float, float],
    spec: Optional[QuadratureSpec] = None,
) -> TrainSpec:
    """
    E_N τ = πm 이 되도록 자유 파라미터를 조정 (Brent 방법)

    Args:
        train: 템플릿 (free_param 값은 무시)
        m: 양의 정수
        free_param: amplitude / period / width
        bracket: 근을 포함하는 구간 (양 끝 부호가 달라야 함)

    Returns:
        조정된 TrainSpec (|E_N τ − πm| ≤ 1e-8)

    Raises:
        NoRootInBracketError: 구간 양 끝에서 부호 변화가 없음
    """
    if m < 1:
        raise NoRootInBracketError(f"m은 1 이상이어야 합니다: {m}")
    train.resonance.validate_for(qubit, omega)
    lo, hi = sorted(bracket)

    def mismatch(value: float) -> float:
        candidate = train.model_copy(update={free_param: value})
        return qubit.delta * gamma_n(candidate, omega, spec) * candidate.period - math.pi * m

    f_lo, f_hi = mismatch(lo), mismatch(hi)
    if f_lo * f_hi > 0 or (f_lo == 0 and f_hi == 0):
        raise NoRootInBracketError(
            f"[{lo}, {hi}]에서 E_Nτ − πm 부호 변화가 없습니다 ({f_lo:.3e}, {f_hi:.3e})"
        )

    root = optimize.brentq(mismatch, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    residual = mismatch(root)
    if abs(residual) > 1e-8:
        raise NumericError(f"조정 잔차 {residual:.3e} > 1e-8 ({free_param}={root})")
    logger.info(f"✅ 정규 영역 조정: {free_param}={root:.10f}, m={m}, 잔차 {residual:.1e}")
    return train.model_copy(update={free_param: root})


def periodicity_defect(train: TrainSpec, qubit: QubitConfig, omega: float,
                       n_periods: int = 10, samples_per_period: int = 200,
                       spec: Optional[QuadratureSpec] = None) -> float:
    """max_t |P₂(t+τ) − P₂(t)| (n_periods 주기 샘플)"""
    t = np.linspace(0.0, n_periods * train.period, n_periods * samples_per_period, endpoint=False)
    p_now = p2_train_identical(train, qubit, omega, t, spec)
    p_next = p2_train_identical(train, qubit, omega, t + train.period, spec)
    return float(np.max(np.abs(p_next - p_now)))


def classify_regime(train: TrainSpec, qubit: QubitConfig, omega: float,
                    spec: Optional[QuadratureSpec] = None) -> Regime:
    """
    regular: 주기 τ로 반복, aperiodic: 반복하지 않음, degenerate: |E_N|τ < 1e-12
    """
    energy = quasienergy(train, qubit, omega, spec).e_n
    if abs(energy) * train.period < 1e-12:
        return "degenerate"
    defect = periodicity_defect(train, qubit, omega, spec=spec)
    return "regular" if defect <= REGULAR_TOLERANCE else "aperiodic"


def floquet_time_series(train: TrainSpec, qubit: QubitConfig, omega: float, grid: ArrayLike,
                        spec: Optional[QuadratureSpec] = None) -> TimeSeries:
    """
    Furry 표현 진폭 궤적: 회전축 (−1)^N (cos Nθ, −sin Nθ, 0), 회전각 G(t)

    extras: g_total, phi
    """
    times = np.asarray(grid, dtype=float)
    energy = quasienergy(train, qubit, omega, spec).e_n
    phase = np.atleast_1d(phi_n(train, qubit, omega, times, spec))
    angle = energy * times + phase
    n, theta = train.order, train.phase
    axis = train.resonance.sign * np.array([math.cos(n * theta), -math.sin(n * theta), 0.0])
    c1, c2 = apply_rotation(angle[:, None] * axis[None, :], np.zeros(times.size), QubitState.ground())
    return TimeSeries(times=times, c1=c1, c2=c2, extras={"g_total": angle, "phi": phase})
