"""
Floquet 도메인 모델

무한 동일 펄스 열: 펄스 k의 중심은 (k + ½)τ, 주기 기준점 t₀ = 0 (펄스 사이 중간).
"""

import logging
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from pulses import DriveField, PulseEnvelope
from resonance import ResonanceOrder

logger = logging.getLogger(__name__)


class TrainSpec(BaseModel):
    """
    동일한 A₀, T, θ를 갖는 주기 τ의 펄스 열
    """

    model_config = ConfigDict(frozen=True)

    amplitude: float = Field(ge=0, allow_inf_nan=False)
    width: float = Field(gt=0, allow_inf_nan=False)
    phase: float = Field(default=0.0, allow_inf_nan=False)
    period: float = Field(gt=0, allow_inf_nan=False)
    resonance: ResonanceOrder
    support_cutoff: float = Field(default=6.0, gt=0)
    overlap_cutoff: float = Field(default=2.0, gt=0)

    @property
    def order(self) -> int:
        return self.resonance.order

    @property
    def is_separated(self) -> bool:
        """τ ≥ 2·overlap_cutoff·T"""
        return self.period >= 2 * self.overlap_cutoff * self.width

    def warn_if_overlapping(self) -> None:
        if not self.is_separated:
            logger.warning(
                f"⚠️ 펄스 열이 겹칩니다 (τ={self.period}, T={self.width}) - 펄스별 Bessel 합으로 계산합니다"
            )

    def pulse(self, k: int) -> PulseEnvelope:
        """k번째 펄스 (중심 (k + ½)τ)"""
        return PulseEnvelope(
            amplitude=self.amplitude,
            center=(k + 0.5) * self.period,
            width=self.width,
            phase=self.phase,
        )

    def neighbor_range(self) -> range:
        """기본 주기 [0, τ]에 기여하는 펄스 인덱스"""
        reach = int(np.ceil(self.support_cutoff * self.width / self.period)) + 1
        return range(-reach, reach + 1)

    def to_drive_field(self, omega: float, n_pulses: int) -> DriveField:
        """유한 절단 (펄스 0 … n_pulses−1)"""
        return DriveField(
            omega=omega,
            pulses=tuple(self.pulse(k) for k in range(n_pulses)),
            support_cutoff=self.support_cutoff,
            overlap_cutoff=self.overlap_cutoff,
        )


@dataclass(frozen=True)
class QuasienergyResult:
    """
    준에너지 결과

    gamma_n: 주기 평균 Bessel 값, e_n = Δγ_N, e_plus = −e_minus = e_n,
    e1 = ε₁ + E_N, e2 = ε₂ − E_N (실제 에너지)
    """

    gamma_n: float
    e_n: float
    e_plus: float
    e_minus: float
    e1: float
    e2: float

    @property
    def real_energies(self) -> tuple[float, float]:
        return self.e1, self.e2


@dataclass(frozen=True)
class QuasienergeticStates:
    """|Φ^±(t)⟩ = e^{∓i(E_N t + φ_N)} |±⟩ 와 주기 부분 U^± = e^{∓iφ_N}"""

    plus: np.ndarray
    minus: np.ndarray
    u_plus: complex
    u_minus: complex
