"""
두 큐비트 Furry 해밀토니안

R(t) = exp[iΛ₁σ_z⁽¹⁾ + iΛ₂σ_z⁽²⁾ − iJtσ_z⁽¹⁾σ_z⁽²⁾] (곱 기저에서 대각)
ĥ_mq = R⁻¹ κ(Δ₁σ_x⊗I + I⊗Δ₂σ_x) R,  (ĥ_mq)_{ab} = X_{ab} e^{i(φ_b − φ_a)}
"""

import math
from typing import Literal, Optional

import numpy as np

from numerics import SIGMA_X, SIGMA_Y, ComplexMatrix, DomainError, QuadratureSpec
from pulses import lambda_exact

from .models import SPIN_1, SPIN_2, TwoQubitConfig

# 두 큐비트 σ_x 항의 배율 (단일 큐비트 모듈과 같은 규격)
TWO_QUBIT_TUNNELING_PREFACTOR = 1.0

_IDENTITY = np.eye(2)


def pauli_conjugation(alpha: float, axis: Literal["x", "y"]) -> ComplexMatrix:
    """
    e^{iασ_z} σ_x e^{−iασ_z} = cos2α σ_x − sin2α σ_y
    e^{iασ_z} σ_y e^{−iασ_z} = sin2α σ_x + cos2α σ_y
    """
    c, s = math.cos(2 * alpha), math.sin(2 * alpha)
    if axis == "x":
        return c * SIGMA_X - s * SIGMA_Y
    if axis == "y":
        return s * SIGMA_X + c * SIGMA_Y
    raise DomainError(f"axis는 'x' 또는 'y'여야 합니다: {axis!r}")


def tunneling_operator(delta1: float, delta2: float) -> np.ndarray:
    """κ(Δ₁σ_x⊗I + I⊗Δ₂σ_x)"""
    return TWO_QUBIT_TUNNELING_PREFACTOR * (
        delta1 * np.kron(SIGMA_X, _IDENTITY) + delta2 * np.kron(_IDENTITY, SIGMA_X)
    )


def frame_phases(lam1, lam2, jt) -> np.ndarray:
    """φ = Λ₁s₁ + Λ₂s₂ − Jt s₁s₂, 형태 (..., 4)"""
    lam1, lam2, jt = (np.asarray(x, dtype=float)[..., None] for x in (lam1, lam2, jt))
    return lam1 * SPIN_1 + lam2 * SPIN_2 - jt * SPIN_1 * SPIN_2


def furry_matrix_from_phases(lam1, lam2, jt, delta1: float, delta2: float) -> np.ndarray:
    """위상 배열에서 ĥ_mq (..., 4, 4)"""
    phases = frame_phases(lam1, lam2, jt)
    tunneling = tunneling_operator(delta1, delta2)
    return tunneling * np.exp(1j * (phases[..., None, :] - phases[..., :, None]))


def furry_hamiltonian_2q(cfg: TwoQubitConfig, t: float,
                         spec: Optional[QuadratureSpec] = None) -> ComplexMatrix:
    """
    시각 t의 4×4 Furry 해밀토니안 (에르미트, 대각 0, 비영 성분 8개)
    """
    if t < 0:
        raise DomainError(f"t는 0 이상이어야 합니다: {t}")
    lam1 = lambda_exact(cfg.qubit1, cfg.drive1, t, spec)
    lam2 = lambda_exact(cfg.qubit2, cfg.drive2, t, spec)
    return furry_matrix_from_phases(lam1, lam2, cfg.coupling * t, cfg.qubit1.delta, cfg.qubit2.delta)
