"""
구동 함수 g(t)와 위상 Λ(t) = ∫₀ᵗ g

Λ는 Furry 표현의 모든 계산에 쓰입니다.
- 스칼라 t: QuadratureSpec 방법으로 직접 적분
- 배열 t: 패널 격자 누적 적분 (PhaseTable)
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
from numpy.typing import ArrayLike

from numerics import DomainError, PanelGrid, QuadratureSpec, integrate

from .models import DriveField, QubitConfig

logger = logging.getLogger(__name__)

LambdaMode = Literal["exact", "adiabatic"]


def g_of_t(qubit: QubitConfig, drive: DriveField, t: ArrayLike):
    """g(t) = ε₀/2 + Σ_k A_k(t) cos(ωt + θ_k)"""
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise DomainError(f"t가 유한하지 않습니다: {t!r}")
    value = qubit.epsilon0 / 2 + drive.carrier(t_arr)
    return float(value) if np.ndim(value) == 0 else value


def resolution_width(qubit: QubitConfig, drive: DriveField, spec: QuadratureSpec) -> float:
    """
    패널 최대 폭

    e^{2iΛ}의 국소 주파수 2g(t) ≤ ε₀ + 2ΣA₀ 와 반송파 ω 중 큰 값의 주기를
    panels_per_period로 나누고, 포락선 폭 T/4 이하로 제한합니다.
    """
    local = max(drive.omega, qubit.epsilon0 + 2 * drive.total_amplitude)
    width = 2 * math.pi / (local * spec.panels_per_period)
    for p in drive.pulses:
        width = min(width, p.width / 4)
    return width


def warn_if_not_adiabatic(drive: DriveField) -> bool:
    """ωT < 2π 인 펄스가 있으면 경고 후 True"""
    short = [p.width for p in drive.pulses if drive.omega * p.width < 2 * math.pi]
    if short:
        logger.warning(
            f"⚠️ 단열 조건 위반: ωT < 2π (ω={drive.omega}, T={min(short)}) - 포락선이 반송파 주기보다 짧습니다"
        )
    return bool(short)


def lambda_adiabatic(qubit: QubitConfig, drive: DriveField, t: ArrayLike):
    """
    Λ(t) ≈ ε₀t/2 + Σ_k A_k(t) sin(ωt + θ_k)/ω  (포락선이 반송파보다 느린 경우)
    """
    warn_if_not_adiabatic(drive)
    t_arr = np.asarray(t, dtype=float)
    value = qubit.epsilon0 * t_arr / 2
    for p in drive.pulses:
        value = value + p.envelope(t_arr, drive.support_cutoff) * np.sin(drive.omega * t_arr + p.phase) / drive.omega
    return float(value) if np.ndim(value) == 0 else value


def lambda_exact(qubit: QubitConfig, drive: DriveField, t: ArrayLike,
                 spec: Optional[QuadratureSpec] = None):
    """
    Λ(t) = ∫₀ᵗ g(t') dt'

    Args:
        qubit: 큐비트 설정
        drive: 구동장
        t: 시각 (스칼라 또는 오름차순이 아니어도 되는 배열, t ≥ 0)
        spec: 적분 설정

    Returns:
        Λ(t)

    Raises:
        QuadratureError: 허용오차 미달
    """
    spec = spec or QuadratureSpec()
    if np.ndim(t) == 0:
        t = float(t)
        if not math.isfinite(t):
            raise DomainError(f"t가 유한하지 않습니다: {t!r}")
        pulse_part = 0.0
        if drive.pulses:
            pulse_part = integrate(drive.carrier, 0.0, t, spec, period=drive.period)
        return qubit.epsilon0 * t / 2 + pulse_part

    table = build_phase_table(qubit, drive, np.asarray(t, dtype=float), spec, "exact")
    return table.lam_at_times


@dataclass(frozen=True)
class PhaseTable:
    """패널 격자 위의 Λ 값 (노드·경계·요청 시각)"""

    grid: PanelGrid
    lam_nodes: np.ndarray
    lam_boundaries: np.ndarray

    @property
    def lam_at_times(self) -> np.ndarray:
        return self.grid.sample(self.lam_boundaries)


def build_phase_table(
    qubit: QubitConfig,
    drive: DriveField,
    times: ArrayLike,
    spec: Optional[QuadratureSpec] = None,
    lambda_mode: LambdaMode = "exact",
    max_width: Optional[float] = None,
    origin: float = 0.0,
    lam_origin: float = 0.0,
) -> PhaseTable:
    """
    출력 시각을 경계로 하는 패널 격자와 그 위의 Λ

    Args:
        max_width: 패널 폭 상한 (생략 시 resolution_width)
        origin: 격자 시작 시각 (times는 origin 이상)
        lam_origin: exact 모드에서 Λ(origin). adiabatic 모드는 닫힌 형식이라 쓰지 않음
    """
    spec = spec or QuadratureSpec()
    width = resolution_width(qubit, drive, spec)
    if max_width is not None:
        width = min(width, max_width)
    grid = PanelGrid.build(times, width, spec.panel_nodes, extra_breaks=drive.breakpoints(), origin=origin)

    if lambda_mode == "adiabatic":
        lam_nodes = lambda_adiabatic(qubit, drive, grid.nodes)
        lam_boundaries = lambda_adiabatic(qubit, drive, grid.boundaries)
        return PhaseTable(grid, np.asarray(lam_nodes), np.asarray(lam_boundaries))

    cumulative = grid.cumulative(np.asarray(g_of_t(qubit, drive, grid.nodes)))
    return PhaseTable(grid, lam_origin + cumulative.at_nodes, lam_origin + cumulative.at_boundaries)


def overlap_check(drive: DriveField) -> bool:
    """
    이웃 펄스가 겹치지 않으면 True

    기준: t_{k+1} − t_k ≥ overlap_cutoff · (T_k + T_{k+1})
    """
    pulses = drive.pulses
    return all(
        b.center - a.center >= drive.overlap_cutoff * (a.width + b.width)
        for a, b in zip(pulses, pulses[1:])
    )


def rotation_axis(qubit: QubitConfig, drive: DriveField, t: float,
                  spec: Optional[QuadratureSpec] = None) -> tuple[np.ndarray, float]:
    """
    Furry 표현에서 순간 회전축 n = (cos 2Λ, sin 2Λ, 0)과 회전 속도 2Δ
    """
    lam = lambda_exact(qubit, drive, t, spec)
    axis = np.array([math.cos(2 * lam), math.sin(2 * lam), 0.0])
    return axis, 2 * qubit.delta
