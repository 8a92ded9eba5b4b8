"""
RWA 닫힌 형식 (정확한 N차 공명)

e^{2iΛ} ≈ (−1)^N J_N(2A/ω) e^{−iNθ} 근사에서
  G_x + i G_y = (−1)^N Δ Σ_k e^{−iNθ_k} j_k(t),  G_z = 0,  P₂ = sin²|G|
"""

import math
from typing import Literal, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from numerics import OverlappingPulsesError, ParameterError, QuadratureSpec, bessel_j
from propagator import QubitState, TimeSeries, apply_rotation, rotation_vector_series
from pulses import DriveField, QubitConfig, build_phase_table, overlap_check, warn_if_not_adiabatic

from .areas import bessel_envelope, pulse_area_integrals
from .models import ResonanceOrder


ToneCombination = Literal["separated", "combined"]


def _scalar_or_array(values: np.ndarray, t: ArrayLike):
    return float(values[0]) if np.ndim(t) == 0 else values


def _prepare(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
             pulses: Optional[int] = None, separated: bool = False) -> None:
    order.validate_for(qubit, drive.omega)
    warn_if_not_adiabatic(drive)
    if pulses is not None and len(drive.pulses) != pulses:
        raise ParameterError(f"펄스 {pulses}개가 필요합니다 (현재 {len(drive.pulses)}개)")
    if separated and not overlap_check(drive):
        raise OverlappingPulsesError(
            "펄스 포락선이 겹칩니다 - p2_overlapping_tones 또는 oracle 모드를 사용하세요"
        )


def p2_single_pulse(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
                    t: ArrayLike, spec: Optional[QuadratureSpec] = None):
    """
    P₂(t) = sin²(Δ ∫₀ᵗ J_N(2A(t')/ω) dt')  (단일 펄스, θ 무관)
    """
    _prepare(qubit, drive, order, pulses=1)
    j = pulse_area_integrals(drive, order.order, t, spec)[0]
    return _scalar_or_array(np.sin(qubit.delta * j) ** 2, t)


def p2_two_pulse(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
                 t: ArrayLike, spec: Optional[QuadratureSpec] = None):
    """
    두 분리 펄스: P₂ = sin²(Δ√w),  w = j₁² + j₂² + 2cos(N(θ₂−θ₁)) j₁j₂

    Raises:
        OverlappingPulsesError: overlap_check 실패
    """
    _prepare(qubit, drive, order, pulses=2, separated=True)
    j1, j2 = pulse_area_integrals(drive, order.order, t, spec)
    dtheta = drive.pulses[1].phase - drive.pulses[0].phase
    w = j1 ** 2 + j2 ** 2 + 2 * math.cos(order.order * dtheta) * j1 * j2
    return _scalar_or_array(np.sin(qubit.delta * np.sqrt(np.maximum(w, 0.0))) ** 2, t)


def train_g_vector(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
                   t: ArrayLike, spec: Optional[QuadratureSpec] = None) -> np.ndarray:
    """
    펄스 열 RWA 회전 벡터 (m, 3): G_x + iG_y = (−1)^N Δ Σ_k e^{−iNθ_k} j_k
    """
    _prepare(qubit, drive, order, separated=True)
    j = pulse_area_integrals(drive, order.order, t, spec)
    phases = np.exp(-1j * order.order * np.array([p.phase for p in drive.pulses]))
    total = order.sign * qubit.delta * (phases @ j) if len(drive.pulses) else np.zeros(j.shape[1], complex)
    return np.stack([total.real, total.imag, np.zeros(total.shape)], axis=1)


def p2_train(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
             t: ArrayLike, spec: Optional[QuadratureSpec] = None):
    """
    M 펄스 열: P₂ = sin²(√(G_x² + G_y²))

    Raises:
        OverlappingPulsesError: overlap_check 실패
    """
    g = train_g_vector(qubit, drive, order, t, spec)
    return _scalar_or_array(np.sin(np.hypot(g[:, 0], g[:, 1])) ** 2, t)


def combined_tone_reduction(a1: float, a2: float, theta1: float, theta2: float,
                            omega: float, order: int) -> tuple[float, float]:
    """
    같은 주파수의 동시 톤 두 개를 하나로 합침

    Ā e^{iθ̄} = A₁e^{iθ₁} + A₂e^{iθ₂},  Ā² = A₁² + A₂² + 2A₁A₂cos(θ₁−θ₂)
    Ā가 0이면 위상은 0으로 반환합니다.

    Args:
        omega, order: 인터페이스 일관성을 위한 인자 (결과에 영향 없음)
    """
    if a1 < 0 or a2 < 0:
        raise ParameterError(f"진폭은 0 이상이어야 합니다: A1={a1}, A2={a2}")
    phasor = a1 * complex(math.cos(theta1), math.sin(theta1)) + a2 * complex(math.cos(theta2), math.sin(theta2))
    amplitude = abs(phasor)
    if amplitude <= 1e-15 * max(1.0, a1 + a2):
        return 0.0, 0.0
    return amplitude, math.atan2(phasor.imag, phasor.real)


def combined_tone_exponential(a1: float, a2: float, theta1: float, theta2: float,
                              omega: float, order: int) -> complex:
    """(−1)^N J_N(2Ā/ω) e^{−iNθ̄}"""
    amplitude, phase = combined_tone_reduction(a1, a2, theta1, theta2, omega, order)
    sign = -1 if order % 2 else 1
    return sign * bessel_j(order, 2 * amplitude / omega) * complex(math.cos(order * phase), -math.sin(order * phase))


def graf_exponential(a1: float, a2: float, theta1: float, theta2: float,
                     omega: float, order: int) -> complex:
    """
    Graf 덧셈 정리 형태 (주 분지, |z| < |Z|에서만 유효)

    (−1)^N e^{−iNθ₂} J_N(w) ((Z − z e^{−iφ}) / (Z − z e^{iφ}))^{N/2},
    z = 2A₁/ω, Z = 2A₂/ω, φ = θ₁ − θ₂ + π, w = √(Z² + z² − 2zZ cos φ)
    """
    z, big_z = 2 * a1 / omega, 2 * a2 / omega
    if not abs(z) < abs(big_z):
        raise ParameterError(f"Graf 형태는 |z| < |Z|에서만 유효합니다: z={z}, Z={big_z}")
    phi = theta1 - theta2 + math.pi
    w = math.sqrt(max(big_z ** 2 + z ** 2 - 2 * z * big_z * math.cos(phi), 0.0))
    ratio = (big_z - z * np.exp(-1j * phi)) / (big_z - z * np.exp(1j * phi))
    sign = -1 if order % 2 else 1
    return complex(sign * np.exp(-1j * order * theta2) * bessel_j(order, w) * ratio ** (order / 2))


def rwa_coupling(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
                 t: ArrayLike, combination: ToneCombination = "separated") -> np.ndarray:
    """
    RWA Furry 결합 κ_RWA(t) (G_x + iG_y = ∫κ_RWA)

    separated: (−1)^N Δ Σ_k J_N(2A_k/ω) e^{−iNθ_k}
    combined:  (−1)^N Δ J_N(2Ā(t)/ω) e^{−iNθ̄(t)} (겹치는 동시 톤)
    """
    t = np.asarray(t, dtype=float)
    n = order.order
    if combination == "separated":
        total = np.zeros(t.shape, dtype=complex)
        for p in drive.pulses:
            total = total + bessel_envelope(p, n, drive.omega, t, drive.support_cutoff) * np.exp(-1j * n * p.phase)
    else:
        phasor = np.zeros(t.shape, dtype=complex)
        for p in drive.pulses:
            phasor = phasor + p.envelope(t, drive.support_cutoff) * np.exp(1j * p.phase)
        total = bessel_j(n, 2 * np.abs(phasor) / drive.omega) * np.exp(-1j * n * np.angle(phasor))
    return order.sign * qubit.delta * total


def p2_overlapping_tones(qubit: QubitConfig, drive: DriveField, order: ResonanceOrder,
                         t: ArrayLike, spec: Optional[QuadratureSpec] = None):
    """
    겹치는 펄스: 매 순간 합친 톤으로 κ_RWA를 만들고 P₂ = sin²|∫κ_RWA|
    """
    _prepare(qubit, drive, order)
    series = rwa_time_series(qubit, drive, order, np.atleast_1d(t), spec, combination="combined")
    return _scalar_or_array(series.p2, t)


def rwa_time_series(
    qubit: QubitConfig,
    drive: DriveField,
    order: ResonanceOrder,
    grid: Sequence[float],
    spec: Optional[QuadratureSpec] = None,
    combination: ToneCombination = "separated",
    magnus_order: int = 1,
    initial: Optional[QubitState] = None,
) -> TimeSeries:
    """
    RWA 회전 벡터로 만든 진폭 궤적 (Furry 위상 e^{±iΛ} 포함)

    magnus_order=2이면 κ_RWA의 교환자 항 G_z도 계산합니다 (단일 펄스에서는 0).
    """
    order.validate_for(qubit, drive.omega)
    times = np.asarray(grid, dtype=float)
    table = build_phase_table(qubit, drive, times, spec, "exact")
    kappa = rwa_coupling(qubit, drive, order, table.grid.nodes, combination)
    g = rotation_vector_series(table.grid, kappa, magnus_order)
    c1, c2 = apply_rotation(g, table.lam_at_times, initial or QubitState.ground())
    return TimeSeries(times=times, c1=c1, c2=c2, extras={"gx": g[:, 0], "gy": g[:, 1], "gz": g[:, 2]})
