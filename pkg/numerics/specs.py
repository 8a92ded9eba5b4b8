"""
수치 설정 모델

적분(QuadratureSpec)과 ODE 오라클(OdeSpec)의 허용오차·방법을 담는 불변 설정입니다.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class QuadratureSpec(BaseModel):
    """
    적분 설정

    - adaptive-quadpack: scipy.integrate.quad (적응형 Gauss–Kronrod), 반송파 주기 단위로 분할
    - gauss-legendre-composite: 복합 Gauss–Legendre, 패널 수를 두 배씩 늘리며 수렴 판정
    - adaptive-simpson: adaptive-quadpack의 별칭 (검증 시 변환)
    """

    model_config = ConfigDict(frozen=True)

    method: Literal["adaptive-quadpack", "gauss-legendre-composite"] = "adaptive-quadpack"
    abs_tol: float = Field(default=1e-10, gt=0)
    rel_tol: float = Field(default=1e-9, gt=0)
    max_subdivisions: int = Field(default=200, ge=1)
    panel_nodes: int = Field(default=10, ge=2, le=40)
    panels_per_period: int = Field(default=20, ge=20)

    @field_validator("method", mode="before")
    @classmethod
    def _resolve_alias(cls, value):
        # 시나리오 파일의 옛 이름은 적응형 백엔드로
        if isinstance(value, str) and value.strip().lower() == "adaptive-simpson":
            return "adaptive-quadpack"
        return value

    def scaled(self, factor: float) -> "QuadratureSpec":
        """허용오차를 factor배 한 사본"""
        if factor <= 0:
            raise ValueError(f"tolerance_scale은 양수여야 합니다: {factor}")
        return self.model_copy(update={
            "abs_tol": self.abs_tol * factor,
            "rel_tol": self.rel_tol * factor,
        })


class OdeSpec(BaseModel):
    """
    ODE 오라클 설정

    rk4-fixed는 step이 필요하고, 적응형 방법은 rtol/atol을 사용합니다.
    """

    model_config = ConfigDict(frozen=True)

    method: Literal["rk4-fixed", "rk45-adaptive", "dop853-adaptive"] = "dop853-adaptive"
    step: Optional[float] = Field(default=None, gt=0)
    rtol: float = Field(default=1e-11, gt=0)
    atol: float = Field(default=1e-13, gt=0)
    max_step: Optional[float] = Field(default=None, gt=0, allow_inf_nan=False)
    max_norm_drift: float = Field(default=1e-9, gt=0)
    dimension: Literal[2, 4] = 2

    @model_validator(mode="after")
    def _check_step(self) -> "OdeSpec":
        if self.method == "rk4-fixed" and self.step is None:
            raise ValueError("rk4-fixed 방법에는 step 값이 필요합니다")
        return self

    def scaled(self, factor: float) -> "OdeSpec":
        """허용오차를 factor배 한 사본 (노름 드리프트 한계 포함)"""
        if factor <= 0:
            raise ValueError(f"tolerance_scale은 양수여야 합니다: {factor}")
        return self.model_copy(update={
            "rtol": self.rtol * factor,
            "atol": self.atol * factor,
            "max_norm_drift": self.max_norm_drift * factor,
        })
