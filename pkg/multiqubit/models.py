"""
두 큐비트 도메인 모델

곱 기저 순서: |11⟩, |12⟩, |21⟩, |22⟩ (첫 번째 숫자가 큐비트 1, 상태 1은 σ_z = +1)
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from numerics import DomainError
from pulses import DriveField, QubitConfig

BASIS_LABELS = ("11", "12", "21", "22")

# 기저 상태별 σ_z 고유값
SPIN_1 = np.array([1.0, 1.0, -1.0, -1.0])
SPIN_2 = np.array([1.0, -1.0, 1.0, -1.0])


class TwoQubitConfig(BaseModel):
    """
    결합된 두 큐비트: 큐비트별 (ε_a, Δ_a, 구동장)과 결합 J
    """

    model_config = ConfigDict(frozen=True)

    qubit1: QubitConfig
    drive1: DriveField
    qubit2: QubitConfig
    drive2: DriveField
    coupling: float = Field(default=0.0, allow_inf_nan=False)


@dataclass(frozen=True)
class FourState:
    """네 진폭 (|11⟩, |12⟩, |21⟩, |22⟩), 단위 노름"""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if amps.size != 4:
            raise DomainError(f"FourState는 진폭 4개가 필요합니다: {amps.size}")
        norm = float(np.sum(np.abs(amps) ** 2))
        if not math.isfinite(norm) or abs(norm - 1.0) > 1e-10:
            raise DomainError(f"상태가 정규화되어 있지 않습니다: {norm}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, label: str = "11") -> "FourState":
        amps = np.zeros(4, dtype=complex)
        amps[BASIS_LABELS.index(label)] = 1.0
        return cls(amps)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "FourState":
        """[[re, im] × 4] (시나리오 JSON)"""
        return cls(np.array([complex(re, im) for re, im in pairs]))


@dataclass(frozen=True)
class TwoQubitSeries:
    """격자 위 네 진폭 궤적 (states: (m, 4))"""

    times: np.ndarray
    states: np.ndarray
    extras: dict = field(default_factory=dict)

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.states) ** 2

    def state(self, index: int) -> FourState:
        return FourState(self.states[index])
