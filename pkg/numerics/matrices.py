"""
Pauli 행렬과 복소 행렬 유틸리티

기저 순서는 |1⟩ = (1, 0) (바닥 상태, σ_z = +1), |2⟩ = (0, 1).
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DomainError

ComplexMatrix = NDArray[np.complex128]

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)

PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _matrix in (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, SIGMA_PLUS, SIGMA_MINUS):
    _matrix.setflags(write=False)


def as_complex_matrix(entries: ArrayLike) -> ComplexMatrix:
    """
    2×2 또는 4×4 유한 복소 행렬로 변환

    Raises:
        DomainError: 크기가 맞지 않거나 유한하지 않은 성분이 있는 경우
    """
    matrix = np.asarray(entries, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] not in (2, 4):
        raise DomainError(f"2×2 또는 4×4 행렬이어야 합니다: {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("행렬에 유한하지 않은 성분이 있습니다")
    return matrix


def is_hermitian(matrix: ArrayLike, atol: float = 1e-12) -> bool:
    m = np.asarray(matrix)
    return bool(np.allclose(m, np.conj(np.swapaxes(m, -1, -2)), atol=atol, rtol=0.0))


def project_pauli(matrix: np.ndarray) -> np.ndarray:
    """
    M → (tr(Mσ_x), tr(Mσ_y), tr(Mσ_z)) / 2

    마지막 두 축이 2×2인 배열을 받아 (..., 3) 복소 배열을 반환합니다.
    """
    m = np.asarray(matrix)
    return np.stack([np.einsum("...ij,ji->...", m, p) for p in PAULI], axis=-1) / 2.0


def pauli_vector(components: ArrayLike) -> np.ndarray:
    """(..., 3) 성분 → Σ c_k σ_k, 결과 (..., 2, 2)"""
    c = np.asarray(components)
    return np.einsum("...k,kij->...ij", c, np.stack(PAULI))
