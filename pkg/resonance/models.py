"""
공명 도메인 모델
"""

from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from numerics import ResonanceMismatchError
from pulses import QubitConfig


class ResonanceOrder(BaseModel):
    """
    N차 공명 ε₀ = Nω

    tolerance: |ε₀ − Nω| / ε₀ 허용치 (닫힌 형식은 비공명에서 조용히 틀어지므로 기본값이 엄격함)
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=1)
    tolerance: float = Field(default=1e-9, gt=0)

    def detuning(self, qubit: QubitConfig, omega: float) -> float:
        """상대 이조 (ε₀ − Nω)/ε₀"""
        return (qubit.epsilon0 - self.order * omega) / qubit.epsilon0

    def validate_for(self, qubit: QubitConfig, omega: float) -> "ResonanceOrder":
        """
        Raises:
            ResonanceMismatchError: 상대 이조가 tolerance 초과
        """
        detuning = self.detuning(qubit, omega)
        if abs(detuning) > self.tolerance:
            raise ResonanceMismatchError(
                f"{self.order}차 공명 조건 위반: ε₀={qubit.epsilon0}, Nω={self.order * omega} "
                f"(상대 이조 {detuning:.3e} > {self.tolerance:.1e}) - 비공명 구동은 oracle 모드를 사용하세요"
            )
        return self

    @property
    def sign(self) -> int:
        """(−1)^N"""
        return -1 if self.order % 2 else 1


@dataclass(frozen=True)
class PulseAreaIntegral:
    """
    j_k = ∫_{t_start}^{t_end} J_N(2A_k(t')/ω) dt'
    """

    pulse_index: int
    order: int
    t_start: float
    t_end: float
    value: float
