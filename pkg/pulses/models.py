"""
펄스 구동 도메인 모델

PulseEnvelope(단일 펄스), DriveField(공통 반송파 + 펄스 열), QubitConfig(큐비트 파라미터)
모두 불변 pydantic 모델이며 JSON 시나리오 블록에서 그대로 검증됩니다.
"""

import math
from typing import Literal, Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator


class PulseEnvelope(BaseModel):
    """
    단일 펄스 포락선

    gaussian: A(t) = A₀ exp(-(t - t_k)² / T²), |t - t_k| > support_cutoff·T 에서 0
    rectangular: |t - t_k| ≤ T/2 에서 A₀ (검증용 포락선)
    """

    model_config = ConfigDict(frozen=True)

    amplitude: float = Field(ge=0, allow_inf_nan=False)
    center: float = Field(allow_inf_nan=False)
    width: float = Field(gt=0, allow_inf_nan=False)
    phase: float = Field(default=0.0, allow_inf_nan=False)
    shape: Literal["gaussian", "rectangular"] = "gaussian"

    def support(self, support_cutoff: float = 6.0) -> tuple[float, float]:
        """포락선이 0이 아닌 구간"""
        half = self.width / 2 if self.shape == "rectangular" else support_cutoff * self.width
        return self.center - half, self.center + half

    def envelope(self, t: ArrayLike, support_cutoff: float = 6.0) -> np.ndarray:
        """A_k(t)"""
        s = np.asarray(t, dtype=float) - self.center
        if self.shape == "rectangular":
            return np.where(np.abs(s) <= self.width / 2, self.amplitude, 0.0)
        u = s / self.width
        return np.where(np.abs(u) <= support_cutoff, self.amplitude * np.exp(-u * u), 0.0)

    def centered_at(self, center: float) -> "PulseEnvelope":
        return self.model_copy(update={"center": center})


class DriveField(BaseModel):
    """
    공통 반송파 주파수 ω를 공유하는 펄스 열

    g(t) = ε₀/2 + Σ_k A_k(t) cos(ωt + θ_k)
    """

    model_config = ConfigDict(frozen=True)

    omega: float = Field(gt=0, allow_inf_nan=False)
    pulses: tuple[PulseEnvelope, ...] = ()
    support_cutoff: float = Field(default=6.0, gt=0)
    overlap_cutoff: float = Field(default=2.0, gt=0)

    @model_validator(mode="after")
    def _check_order(self) -> "DriveField":
        centers = [p.center for p in self.pulses]
        if any(b < a for a, b in zip(centers, centers[1:])):
            raise ValueError(f"pulses는 center 오름차순이어야 합니다: {centers}")
        return self

    @property
    def period(self) -> float:
        """반송파 주기 2π/ω"""
        return 2 * math.pi / self.omega

    @property
    def total_amplitude(self) -> float:
        return float(sum(p.amplitude for p in self.pulses))

    def envelopes(self, t: ArrayLike) -> np.ndarray:
        """펄스별 A_k(t), 형태 (M,) + t.shape"""
        t = np.asarray(t, dtype=float)
        if not self.pulses:
            return np.zeros((0,) + t.shape)
        return np.stack([p.envelope(t, self.support_cutoff) for p in self.pulses])

    def carrier(self, t: ArrayLike) -> np.ndarray:
        """Σ_k A_k(t) cos(ωt + θ_k)"""
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape)
        for p in self.pulses:
            total = total + p.envelope(t, self.support_cutoff) * np.cos(self.omega * t + p.phase)
        return float(total) if total.ndim == 0 else total

    def breakpoints(self) -> list[float]:
        """포락선 불연속점 (사각 펄스 가장자리)"""
        edges = []
        for p in self.pulses:
            if p.shape == "rectangular":
                edges.extend(p.support())
        return edges

    def with_pulses(self, pulses) -> "DriveField":
        return self.model_copy(update={"pulses": tuple(pulses)})


class QubitConfig(BaseModel):
    """
    큐비트 파라미터

    ε₀ > 0 은 준위 간격, Δ는 터널링 결합. ε₁, ε₂ 중 하나만 주면 나머지는 ε₂ − ε₁ = ε₀ 로 결정되고,
    둘 다 생략하면 ε₁ = −ε₀/2 입니다.
    """

    model_config = ConfigDict(frozen=True)

    epsilon0: float = Field(gt=0, allow_inf_nan=False)
    delta: float = Field(allow_inf_nan=False)
    epsilon1: Optional[float] = Field(default=None, allow_inf_nan=False)
    epsilon2: Optional[float] = Field(default=None, allow_inf_nan=False)

    @model_validator(mode="before")
    @classmethod
    def _fill_levels(cls, data):
        if not isinstance(data, dict) or "epsilon0" not in data:
            return data
        data = dict(data)
        eps0 = float(data["epsilon0"])
        e1, e2 = data.get("epsilon1"), data.get("epsilon2")
        if e1 is None and e2 is None:
            data["epsilon1"] = -eps0 / 2
            data["epsilon2"] = eps0 / 2
        elif e1 is None:
            data["epsilon1"] = float(e2) - eps0
        elif e2 is None:
            data["epsilon2"] = float(e1) + eps0
        return data

    @model_validator(mode="after")
    def _check_levels(self) -> "QubitConfig":
        gap = self.epsilon2 - self.epsilon1
        if abs(gap - self.epsilon0) > 1e-12 * max(1.0, abs(self.epsilon0)):
            raise ValueError(
                f"epsilon2 - epsilon1 ({gap})이 epsilon0 ({self.epsilon0})과 다릅니다"
            )
        return self
