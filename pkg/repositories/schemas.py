"""
파일 스키마 - 시나리오 / 스윕 / 레시피

JSON 파일 블록을 그대로 검증하는 pydantic 모델입니다.
모든 에너지·주파수는 ε₀ 단위, 시간은 1/ε₀ 단위입니다.
"""

from typing import Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from floquet import TrainSpec
from multiqubit import TwoQubitConfig
from numerics import OdeSpec, QuadratureSpec
from pulses import DriveField, QubitConfig
from resonance import ResonanceOrder

ScenarioMode = Literal[
    "oracle", "oracle-dressed", "magnus", "rwa-single", "rwa-two-pulse", "rwa-train", "floquet", "two-qubit"
]
Reduction = Literal["max_p2", "final_p2", "quasienergy", "full-trace"]

# 모드별 필수 블록
REQUIRED_BLOCKS: dict[str, tuple[str, ...]] = {
    "oracle": ("qubit", "drive"),
    "oracle-dressed": ("qubit", "drive", "resonance"),
    "magnus": ("qubit", "drive"),
    "rwa-single": ("qubit", "drive", "resonance"),
    "rwa-two-pulse": ("qubit", "drive", "resonance"),
    "rwa-train": ("qubit", "drive", "resonance"),
    "floquet": ("qubit", "drive", "train"),
    "two-qubit": ("two_qubit",),
}


class GridSpec(BaseModel):
    """출력 시각 격자 (등간격)"""

    model_config = ConfigDict(frozen=True)

    t_start: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    t_end: float = Field(gt=0, allow_inf_nan=False)
    n_points: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_window(self) -> "GridSpec":
        if self.t_end <= self.t_start:
            raise ValueError(f"grid.t_end ({self.t_end})는 grid.t_start ({self.t_start})보다 커야 합니다")
        return self

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)


class OutputSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: Optional[str] = None
    format: Literal["csv"] = "csv"


class MagnusBlock(BaseModel):
    """restart_area를 주면 |Δ|·L ≤ restart_area 조각마다 급수를 재시작"""

    model_config = ConfigDict(frozen=True)

    order: Literal[1, 2, 3] = 2
    lambda_mode: Literal["exact", "adiabatic"] = "exact"
    restart_area: Optional[float] = Field(default=None, gt=0, allow_inf_nan=False)


class RwaBlock(BaseModel):
    """겹치는 펄스는 combination="combined"로 합친 톤 처리"""

    model_config = ConfigDict(frozen=True)

    combination: Literal["separated", "combined"] = "separated"


class TwoQubitBlock(TwoQubitConfig):
    """두 큐비트 설정 + 전파 방법"""

    method: Literal["magnus1", "magnus1-global", "oracle"] = "magnus1"


class Scenario(BaseModel):
    """
    시나리오 파일 한 개

    floquet 모드는 drive 블록에서 반송파 ω만 사용합니다 (pulses는 train이 대신함).
    initial은 [[re, im], ...] (단일 큐비트 2쌍, 두 큐비트 4쌍), t = 0 기준입니다.
    """

    model_config = ConfigDict(frozen=True)

    name: str = "scenario"
    mode: ScenarioMode
    qubit: Optional[QubitConfig] = None
    drive: Optional[DriveField] = None
    train: Optional[TrainSpec] = None
    resonance: Optional[ResonanceOrder] = None
    magnus: MagnusBlock = MagnusBlock()
    rwa: RwaBlock = RwaBlock()
    two_qubit: Optional[TwoQubitBlock] = None
    initial: Optional[list[tuple[float, float]]] = None
    grid: GridSpec
    quadrature: QuadratureSpec = QuadratureSpec()
    ode: OdeSpec = OdeSpec()
    output: OutputSpec = OutputSpec()
    assumptions: list[str] = []

    @model_validator(mode="after")
    def _check_blocks(self) -> "Scenario":
        missing = [block for block in REQUIRED_BLOCKS[self.mode] if getattr(self, block) is None]
        if missing:
            raise ValueError(f"mode '{self.mode}'에 필요한 블록이 없습니다: {', '.join(missing)}")
        if self.initial is not None:
            expected = 4 if self.mode == "two-qubit" else 2
            if len(self.initial) != expected:
                raise ValueError(f"initial은 진폭 {expected}쌍이어야 합니다: {len(self.initial)}쌍")
        return self

    def scaled(self, factor: float) -> "Scenario":
        """수치 허용오차를 factor배 한 사본"""
        if factor == 1.0:
            return self
        return self.model_copy(update={
            "quadrature": self.quadrature.scaled(factor),
            "ode": self.ode.scaled(factor),
        })


class LinspaceValues(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    num: int = Field(ge=1)

    def values(self) -> list[float]:
        return np.linspace(self.start, self.stop, self.num).tolist()


class SweepSpec(BaseModel):
    """
    파라미터 스윕

    parameter: 시나리오 내부 경로 (예: "drive.pulses[0].amplitude", "train.width")
    scenario: 인라인 시나리오 또는 레시피 이름 / 시나리오 파일 경로
    """

    model_config = ConfigDict(frozen=True)

    name: str = "sweep"
    scenario: Union[Scenario, str]
    parameter: str = Field(min_length=1)
    values: Union[list[float], LinspaceValues]
    reduction: Reduction = "max_p2"
    output: OutputSpec = OutputSpec()

    @field_validator("values")
    @classmethod
    def _non_empty(cls, values):
        if isinstance(values, list) and not values:
            raise ValueError("values가 비어 있습니다")
        return values

    def resolved_values(self) -> list[float]:
        return list(self.values) if isinstance(self.values, list) else self.values.values()


class CaptionParameters(BaseModel):
    """
    그림 캡션 파라미터 (레시피 기본값 / 곡선별 덮어쓰기)

    spacing은 펄스 간격 τ/T, period는 τ 자체 (둘 중 하나), 나머지는 ε₀ 단위
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    epsilon0: Optional[float] = None
    delta: Optional[float] = None
    omega: Optional[float] = None
    order: Optional[int] = None
    amplitude: Optional[float] = None
    width: Optional[float] = None
    n_pulses: Optional[int] = None
    spacing: Optional[float] = None
    period: Optional[float] = None
    phases: Optional[list[float]] = None
    magnus_order: Optional[int] = None
    restart_area: Optional[float] = None
    resonance_tolerance: Optional[float] = None
    n_periods: Optional[int] = None
    n_points: Optional[int] = None


class RecipeCurve(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str = Field(pattern=r"^[a-z]$")
    label: str
    overrides: CaptionParameters = CaptionParameters()
    modes: Optional[list[ScenarioMode]] = None
    assumptions: list[str] = []


class RecipeSweep(BaseModel):
    """레시피 스윕 축 (amplitude 또는 width)"""

    model_config = ConfigDict(frozen=True)

    parameter: Literal["amplitude", "width"]
    values: LinspaceValues
    reduction: Reduction = "quasienergy"


class Recipe(BaseModel):
    """그림 재현 레시피 (recipes/figN.json)"""

    model_config = ConfigDict(frozen=True)

    name: str = Field(pattern=r"^fig[1-8]$")
    title: str
    layout: Literal["single", "two-pulse", "train", "floquet"]
    modes: list[ScenarioMode] = Field(min_length=1)
    parameters: CaptionParameters
    curves: list[RecipeCurve] = Field(min_length=1)
    sweep: Optional[RecipeSweep] = None
    assumptions: list[str] = []
