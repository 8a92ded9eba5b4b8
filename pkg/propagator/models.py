"""
전파 결과 모델

GVector(회전 벡터), QubitState(진폭 쌍), TimeSeries(격자 위 궤적)
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from numerics import DomainError


@dataclass(frozen=True)
class GVector:
    """
    Magnus 회전 벡터 G = (gx, gy, gz), 전파자 exp(-i G·σ)
    """

    gx: float
    gy: float
    gz: float

    @property
    def magnitude(self) -> float:
        return math.sqrt(self.gx ** 2 + self.gy ** 2 + self.gz ** 2)

    @property
    def rho(self) -> Optional[tuple[float, float, float]]:
        """단위 벡터 G/|G| (G = 0이면 None)"""
        g = self.magnitude
        if g == 0.0:
            return None
        return self.gx / g, self.gy / g, self.gz / g

    def as_array(self) -> np.ndarray:
        return np.array([self.gx, self.gy, self.gz])

    def __add__(self, other: "GVector") -> "GVector":
        return GVector(self.gx + other.gx, self.gy + other.gy, self.gz + other.gz)


@dataclass(frozen=True)
class QubitState:
    """
    진폭 (c1, c2), |c1|² + |c2|² = 1
    """

    c1: complex
    c2: complex

    def __post_init__(self):
        norm = abs(self.c1) ** 2 + abs(self.c2) ** 2
        if not math.isfinite(norm) or abs(norm - 1.0) > 1e-10:
            raise DomainError(f"상태가 정규화되어 있지 않습니다: |c1|²+|c2|² = {norm}")

    @classmethod
    def ground(cls) -> "QubitState":
        return cls(1.0 + 0j, 0j)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "QubitState":
        """[[re, im], [re, im]] 형식 (시나리오 JSON)"""
        (r1, i1), (r2, i2) = pairs
        return cls(complex(r1, i1), complex(r2, i2))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)


@dataclass(frozen=True)
class TimeSeries:
    """
    격자 위 진폭 궤적

    extras: 모드별 부가 열 (gx, gy, gz, rho_z 등)
    """

    times: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    extras: dict = field(default_factory=dict)

    @property
    def p2(self) -> np.ndarray:
        return np.clip(np.abs(self.c2) ** 2, 0.0, 1.0)

    @property
    def p1(self) -> np.ndarray:
        return np.clip(np.abs(self.c1) ** 2, 0.0, 1.0)

    @property
    def inversion(self) -> np.ndarray:
        """P₂ − P₁"""
        return self.p2 - self.p1

    @property
    def norm_error(self) -> float:
        return float(np.max(np.abs(np.abs(self.c1) ** 2 + np.abs(self.c2) ** 2 - 1.0)))

    def state(self, index: int) -> QubitState:
        return QubitState(complex(self.c1[index]), complex(self.c2[index]))
