"""
Furry 표현 Magnus 전파자 (1~3차)

Furry 표현: ψ = e^{iΛσ_z} φ,  i dφ/dt = ĥ φ,  ĥ = Re κ σ_x + Im κ σ_y,  κ(t) = Δ e^{2iΛ(t)}
전파자: φ(t) = exp(-i G(t)·σ) φ(0)

- 1차: G_x + i G_y = ∫₀ᵗ κ
- 2차: G_z = ∫₀ᵗ [Re κ(t') ∫₀^{t'} Im κ − Im κ(t') ∫₀^{t'} Re κ] dt'
- 3차: Ω₃ = (i/6)∭_{t1>t2>t3} ([ĥ1,[ĥ2,ĥ3]] + [ĥ3,[ĥ2,ĥ1]]) 을 2×2 행렬로 누적 후 Pauli 성분으로 투영

모든 중첩 적분은 PanelGrid 누적 테이블로 계산합니다.

재시작 모드(restart_area)는 구간을 |Δ|·L ≤ restart_area 조각으로 나눠 조각마다 급수를 새로 세우고
SU(2) 전파자를 곱해 잇습니다. 긴 자유 세차 구간에서 전역 급수가 수렴 범위를 벗어날 때 씁니다.
"""

import logging
import math
from typing import Literal, Optional, Sequence

import numpy as np

from numerics import DomainError, PanelGrid, QuadratureSpec, pauli_vector, project_pauli
from pulses import DriveField, QubitConfig, build_phase_table
from pulses.phase import LambdaMode

from .models import GVector, QubitState, TimeSeries

logger = logging.getLogger(__name__)

MagnusOrder = Literal[1, 2, 3]

THIRD_ORDER_WARN_WINDOW = 500.0

# 조각당 결합 면적 |Δ|·L 기본값 (rad)
DEFAULT_RESTART_AREA = 0.25

# ĥ_{p1} ĥ_{p2} ĥ_{p3} 형태 항의 계수 (p: 시각 라벨, t1 > t2 > t3)
_OMEGA3_TERMS = (
    ((1, 2, 3), 2.0),
    ((3, 2, 1), 2.0),
    ((1, 3, 2), -1.0),
    ((2, 3, 1), -1.0),
    ((3, 1, 2), -1.0),
    ((2, 1, 3), -1.0),
)
_POSITION_INDICES = ("ij", "jl", "lk")


def furry_hamiltonian(qubit: QubitConfig, lam: float) -> np.ndarray:
    """ĥ = Δ(e^{-2iΛ}σ₊ + e^{2iΛ}σ₋)"""
    kappa = qubit.delta * np.exp(2j * lam)
    return coupling_matrices(np.asarray(kappa))


def coupling_matrices(kappa: np.ndarray) -> np.ndarray:
    """κ(...) → ĥ(..., 2, 2), ĥ₀₁ = κ*, ĥ₁₀ = κ"""
    kappa = np.asarray(kappa, dtype=complex)
    h = np.zeros(kappa.shape + (2, 2), dtype=complex)
    h[..., 0, 1] = np.conj(kappa)
    h[..., 1, 0] = kappa
    return h


def third_order_series(grid: PanelGrid, kappa_nodes: np.ndarray) -> np.ndarray:
    """
    3차 Magnus 보정 G₃ (요청 시각별, 형태 (m, 3))

    F(t) = ∫₀ᵗ ĥ,  K(t) = ∫₀ᵗ ĥ(t₂) ⊗ F(t₂) dt₂ 를 만든 뒤,
    각 곱 순서에 대해 ĥ(t₁)과 K(t₁)을 einsum으로 결합하고 t₁에 대해 누적합니다.
    """
    h = coupling_matrices(kappa_nodes)
    inner = grid.cumulative(h).at_nodes
    pair = grid.cumulative(np.einsum("...ab,...cd->...abcd", h, inner)).at_nodes

    total = np.zeros(h.shape, dtype=complex)
    for labels, coefficient in _OMEGA3_TERMS:
        position = {label: pos for pos, label in enumerate(labels)}
        outer = _POSITION_INDICES[position[1]]
        middle = _POSITION_INDICES[position[2]] + _POSITION_INDICES[position[3]]
        total += coefficient * np.einsum(f"...{outer},...{middle}->...ik", h, pair)

    accumulated = grid.sample(grid.cumulative(total).at_boundaries)
    # Ω₃ = (i/6)·total = -i G₃·σ
    return -np.real(project_pauli(accumulated)) / 6.0


def rotation_vector_series(grid: PanelGrid, kappa_nodes: np.ndarray, order: int = 2) -> np.ndarray:
    """
    일반 결합 κ(t)에 대한 G(t), 형태 (m, 3)

    Args:
        grid: 출력 시각을 경계로 포함한 패널 격자
        kappa_nodes: 노드에서의 κ (P, n)
        order: Magnus 차수 1~3
    """
    if order not in (1, 2, 3):
        raise DomainError(f"Magnus 차수는 1, 2, 3 중 하나여야 합니다: {order}")

    u = np.real(kappa_nodes)
    v = np.imag(kappa_nodes)
    cu = grid.cumulative(u)
    cv = grid.cumulative(v)

    g = np.zeros((grid.sample_index.size, 3))
    g[:, 0] = grid.sample(cu.at_boundaries)
    g[:, 1] = grid.sample(cv.at_boundaries)
    if order >= 2:
        commutator = u * cv.at_nodes - v * cu.at_nodes
        g[:, 2] = grid.sample(grid.cumulative(commutator).at_boundaries)
    if order == 3:
        g += third_order_series(grid, kappa_nodes)
    return g


def _furry_coupling(qubit: QubitConfig, drive: DriveField, times, spec, lambda_mode):
    table = build_phase_table(qubit, drive, times, spec, lambda_mode)
    kappa = qubit.delta * np.exp(2j * table.lam_nodes)
    return table, kappa


def g_vector(
    qubit: QubitConfig,
    drive: DriveField,
    t: float,
    order: MagnusOrder = 2,
    lambda_mode: LambdaMode = "exact",
    spec: Optional[QuadratureSpec] = None,
) -> GVector:
    """
    시각 t의 Magnus 회전 벡터

    Args:
        qubit: 큐비트 설정
        drive: 구동장
        t: 시각 (≥ 0)
        order: 1 (gz = 0), 2 (이중 적분 gz), 3 (3차 보정 포함)
        lambda_mode: Λ 계산 방식
        spec: 적분 설정

    Returns:
        GVector
    """
    if t < 0:
        raise DomainError(f"t는 0 이상이어야 합니다: {t}")
    table, kappa = _furry_coupling(qubit, drive, [t], spec, lambda_mode)
    gx, gy, gz = rotation_vector_series(table.grid, kappa, order)[0]
    return GVector(float(gx), float(gy), float(gz))


def magnus_third_correction(
    qubit: QubitConfig,
    drive: DriveField,
    t: float,
    spec: Optional[QuadratureSpec] = None,
    warn_window: float = THIRD_ORDER_WARN_WINDOW,
) -> GVector:
    """
    3차 Magnus 보정 ΔG (G = G₁ + G₂ + ΔG)

    t가 warn_window를 넘으면 계산 비용 경고를 남깁니다.
    """
    if t < 0:
        raise DomainError(f"t는 0 이상이어야 합니다: {t}")
    if t > warn_window:
        logger.warning(f"⚠️ 3차 Magnus 보정: 구간 길이 {t:.1f} > {warn_window:.1f}, 계산 시간이 길어질 수 있습니다")
    table, kappa = _furry_coupling(qubit, drive, [t], spec, "exact")
    gx, gy, gz = third_order_series(table.grid, kappa)[0]
    return GVector(float(gx), float(gy), float(gz))


def rotation_matrix(g: Sequence[float]) -> np.ndarray:
    """exp(-i G·σ) = cos G − i sin G (ρ·σ), G = 0 이면 단위 행렬"""
    gx, gy, gz = g
    c1, c2 = apply_rotation(np.array([[gx, gy, gz]]), np.zeros(1), QubitState(1.0, 0.0))
    d1, d2 = apply_rotation(np.array([[gx, gy, gz]]), np.zeros(1), QubitState(0.0, 1.0))
    return np.array([[c1[0], d1[0]], [c2[0], d2[0]]])


def apply_rotation(g: np.ndarray, lam: np.ndarray, initial: QubitState) -> tuple[np.ndarray, np.ndarray]:
    """
    실험실 진폭 (C₁, C₂) = e^{±iΛ} exp(-i G·σ) (C₁(0), C₂(0))

    Args:
        g: (m, 3) 회전 벡터
        lam: (m,) 각 시각의 Λ
        initial: t = 0 상태
    """
    g = np.asarray(g, dtype=float)
    magnitude = np.linalg.norm(g, axis=1)
    cos_g = np.cos(magnitude)
    # ρ sin G = G · sin G / G
    scaled = g * np.sinc(magnitude / np.pi)[:, None]
    sx, sy, sz = scaled[:, 0], scaled[:, 1], scaled[:, 2]
    a, b = initial.c1, initial.c2

    phi1 = (cos_g - 1j * sz) * a + (-1j * sx - sy) * b
    phi2 = (-1j * sx + sy) * a + (cos_g + 1j * sz) * b
    return np.exp(1j * lam) * phi1, np.exp(-1j * lam) * phi2


def su2_matrices(g: np.ndarray) -> np.ndarray:
    """(m, 3) 회전 벡터 → (m, 2, 2) 행렬 exp(-i G·σ)"""
    g = np.asarray(g, dtype=float)
    magnitude = np.linalg.norm(g, axis=1)
    scaled = g * np.sinc(magnitude / np.pi)[:, None]
    return np.cos(magnitude)[:, None, None] * np.eye(2) - 1j * pauli_vector(scaled)


def rotation_vector_of(u: np.ndarray) -> np.ndarray:
    """
    SU(2) 행렬 (..., 2, 2) → G (..., 3), exp(-i G·σ) = U, |G| ∈ [0, π]
    """
    u = np.asarray(u, dtype=complex)
    cos_g = np.real(np.trace(u, axis1=-2, axis2=-1)) / 2
    sin_rho = np.real(1j * project_pauli(u))
    sin_g = np.linalg.norm(sin_rho, axis=-1)
    angle = np.arctan2(sin_g, cos_g)
    factor = np.divide(angle, sin_g, out=np.zeros_like(angle), where=sin_g > 0)
    return sin_rho * factor[..., None]


def restart_points(delta: float, t_end: float, restart_area: Optional[float]) -> np.ndarray:
    """
    재시작 경계 0 = s₀ < s₁ < … = t_end (조각마다 |Δ|·L ≤ restart_area)

    restart_area가 None이거나 Δ = 0이면 [0, t_end] 한 조각입니다.
    """
    if restart_area is None:
        return np.array([0.0, t_end])
    if not (restart_area > 0 and math.isfinite(restart_area)):
        raise DomainError(f"restart_area는 양의 유한값이어야 합니다: {restart_area}")
    if delta == 0.0 or t_end <= 0.0:
        return np.array([0.0, t_end])
    count = max(1, math.ceil(abs(delta) * t_end / restart_area))
    return np.linspace(0.0, t_end, count + 1)


def _propagate_restarted(qubit, drive, times, order, lambda_mode, initial, spec, points):
    """조각별 급수를 이어 붙인 진폭과 합성 회전 벡터"""
    c1 = np.empty(times.size, dtype=complex)
    c2 = np.empty(times.size, dtype=complex)
    g_total = np.empty((times.size, 3))
    carried = np.eye(2, dtype=complex)
    lam_start = 0.0
    panels = 0

    for k, (lo, hi) in enumerate(zip(points[:-1], points[1:])):
        inside = (times <= hi) & ((times > lo) if k else (times >= lo))
        count = int(np.count_nonzero(inside))
        segment = times[inside]
        if count == 0 or segment[-1] < hi:
            segment = np.append(segment, hi)

        table = build_phase_table(qubit, drive, segment, spec, lambda_mode, origin=lo, lam_origin=lam_start)
        kappa = qubit.delta * np.exp(2j * table.lam_nodes)
        g = rotation_vector_series(table.grid, kappa, order)
        lam = table.lam_at_times
        panels += table.grid.panel_count

        phi = carried @ initial.as_array()
        a, b = apply_rotation(g, lam, QubitState(complex(phi[0]), complex(phi[1])))
        c1[inside], c2[inside] = a[:count], b[:count]
        composite = np.einsum("mij,jk->mik", su2_matrices(g), carried)
        g_total[inside] = rotation_vector_of(composite[:count])

        carried = composite[-1]
        lam_start = float(lam[-1])

    logger.debug(f"Magnus {order}차 재시작: 조각 {points.size - 1}개, 패널 {panels}개, 샘플 {times.size}개")
    return c1, c2, g_total


def propagate_magnus(
    qubit: QubitConfig,
    drive: DriveField,
    grid: Sequence[float],
    order: MagnusOrder = 2,
    lambda_mode: LambdaMode = "exact",
    initial: Optional[QubitState] = None,
    spec: Optional[QuadratureSpec] = None,
    restart_area: Optional[float] = None,
) -> TimeSeries:
    """
    격자 전체에서 Magnus 진폭 계산

    Args:
        grid: 오름차순 출력 시각 (≥ 0, 초기 상태는 t = 0 기준)
        restart_area: 주어지면 |Δ|·L ≤ restart_area 조각마다 급수를 재시작 (None이면 전역 급수)

    Returns:
        TimeSeries (extras: gx, gy, gz, rho_z). 재시작 모드의 G는 합성 전파자의 주값 회전 벡터
    """
    times = np.asarray(grid, dtype=float)
    if times.ndim != 1 or times.size == 0 or np.any(np.diff(times) < 0):
        raise DomainError("grid는 비어 있지 않은 오름차순 배열이어야 합니다")
    if times[0] < 0:
        raise DomainError(f"grid는 0 이상이어야 합니다: {times[0]}")
    initial = initial or QubitState.ground()
    if order == 3 and times[-1] > THIRD_ORDER_WARN_WINDOW:
        logger.warning(f"⚠️ 3차 Magnus 보정: 구간 길이 {times[-1]:.1f}, 계산 시간이 길어질 수 있습니다")

    points = restart_points(qubit.delta, float(times[-1]), restart_area)
    if points.size > 2:
        if order not in (1, 2, 3):
            raise DomainError(f"Magnus 차수는 1, 2, 3 중 하나여야 합니다: {order}")
        c1, c2, g = _propagate_restarted(qubit, drive, times, order, lambda_mode, initial, spec, points)
    else:
        table, kappa = _furry_coupling(qubit, drive, times, spec, lambda_mode)
        g = rotation_vector_series(table.grid, kappa, order)
        c1, c2 = apply_rotation(g, table.lam_at_times, initial)
        logger.debug(f"Magnus {order}차: 패널 {table.grid.panel_count}개, 샘플 {times.size}개")

    magnitude = np.linalg.norm(g, axis=1)
    rho_z = np.divide(g[:, 2], magnitude, out=np.zeros_like(magnitude), where=magnitude > 0)
    return TimeSeries(
        times=times,
        c1=c1,
        c2=c2,
        extras={"gx": g[:, 0], "gy": g[:, 1], "gz": g[:, 2], "rho_z": rho_z},
    )
