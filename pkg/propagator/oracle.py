"""
실험실 좌표 오라클: H(t) = −g(t)σ_z + Δσ_x 를 직접 적분

dressed 비교: Δ가 유한하면 자유 분리는 √(ε₀² + 4Δ²)이고 바닥 상태 |1⟩은 고유 상태가 아닙니다.
RWA 닫힌 형식과 비교할 때는 ε₀'를 √(ε₀'² + 4Δ²) = Nω가 되게 맞추고,
자유 해밀토니안 고유 기저(dressed basis)의 진폭을 보고합니다.
"""

import math
from typing import Optional, Sequence

import numpy as np

from numerics import SIGMA_X, SIGMA_Z, DomainError, OdeSpec, integrate_ode_trajectory
from pulses import DriveField, QubitConfig, g_of_t

from .models import QubitState, TimeSeries


def lab_hamiltonian(qubit: QubitConfig, drive: DriveField):
    """t → −g(t)σ_z + Δσ_x"""
    tunneling = qubit.delta * SIGMA_X

    def hamiltonian(t: float) -> np.ndarray:
        return -g_of_t(qubit, drive, t) * SIGMA_Z + tunneling

    return hamiltonian


def propagate_oracle(
    qubit: QubitConfig,
    drive: DriveField,
    grid: Sequence[float],
    initial: Optional[QubitState] = None,
    spec: Optional[OdeSpec] = None,
) -> TimeSeries:
    """
    ODE 오라클 궤적 (초기 상태는 t = 0 기준)

    Returns:
        TimeSeries (extras: norm_drift)
    """
    initial = initial or QubitState.ground()
    solution = integrate_ode_trajectory(
        lab_hamiltonian(qubit, drive),
        initial.as_array(),
        np.asarray(grid, dtype=float),
        spec,
    )
    return TimeSeries(
        times=solution.times,
        c1=solution.states[:, 0],
        c2=solution.states[:, 1],
        extras={"norm_drift": solution.norm_drift},
    )


def dressed_qubit(qubit: QubitConfig, omega: float, order: int) -> QubitConfig:
    """
    자유 분리 √(ε₀'² + 4Δ²)가 Nω와 같도록 ε₀'를 맞춘 큐비트

    Raises:
        DomainError: N < 1 이거나 Nω ≤ 2|Δ| 인 경우
    """
    target = order * omega
    if order < 1 or target <= 2 * abs(qubit.delta):
        raise DomainError(f"dressed 공명 불가: Nω={target}, 2|Δ|={2 * abs(qubit.delta)}")
    return QubitConfig(epsilon0=math.sqrt(target ** 2 - 4 * qubit.delta ** 2), delta=qubit.delta)


def dressed_basis(qubit: QubitConfig) -> np.ndarray:
    """
    −(ε₀/2)σ_z + Δσ_x 의 고유벡터 (열 0: 바닥, 열 1: 들뜬)

    Δ → 0 에서 단위 행렬이 되도록 대각 성분을 양수로 맞춥니다.
    """
    _, vectors = np.linalg.eigh(np.real(-0.5 * qubit.epsilon0 * SIGMA_Z + qubit.delta * SIGMA_X))
    signs = np.sign(np.diag(vectors))
    signs[signs == 0] = 1.0
    return vectors * signs[None, :]


def propagate_oracle_dressed(
    qubit: QubitConfig,
    drive: DriveField,
    grid: Sequence[float],
    order: int,
    initial: Optional[QubitState] = None,
    spec: Optional[OdeSpec] = None,
) -> TimeSeries:
    """
    dressed 공명에 맞춘 오라클 궤적 (진폭은 dressed basis 성분)

    Args:
        qubit: 공칭 큐비트 (Δ만 사용, ε₀는 dressed 공명 값으로 교체)
        order: 공명 차수 N
        initial: dressed basis 기준 초기 상태 (기본값: dressed 바닥 상태)

    Returns:
        TimeSeries (extras: norm_drift, epsilon0_dressed)
    """
    shifted = dressed_qubit(qubit, drive.omega, order)
    basis = dressed_basis(shifted)
    initial = initial or QubitState.ground()
    solution = integrate_ode_trajectory(
        lab_hamiltonian(shifted, drive),
        basis @ initial.as_array(),
        np.asarray(grid, dtype=float),
        spec,
    )
    amplitudes = solution.states @ basis.conj()
    return TimeSeries(
        times=solution.times,
        c1=amplitudes[:, 0],
        c2=amplitudes[:, 1],
        extras={"norm_drift": solution.norm_drift, "epsilon0_dressed": shifted.epsilon0},
    )
