"""
Repository 계층 - 데이터 접근 계층

레시피·시나리오 파일 읽기와 결과 파일 쓰기만 수행합니다.
파일 스키마(pydantic 모델)도 이 계층에서 정의합니다.
"""

from .recipe_repository import RecipeRepository
from .result_repository import ResultRepository
from .scenario_repository import ScenarioRepository
from .schemas import (
    CaptionParameters,
    GridSpec,
    LinspaceValues,
    MagnusBlock,
    OutputSpec,
    Recipe,
    RecipeCurve,
    RecipeSweep,
    RwaBlock,
    Scenario,
    SweepSpec,
    TwoQubitBlock,
)

__all__ = [
    "RecipeRepository",
    "ResultRepository",
    "ScenarioRepository",
    "CaptionParameters",
    "GridSpec",
    "LinspaceValues",
    "MagnusBlock",
    "OutputSpec",
    "Recipe",
    "RecipeCurve",
    "RecipeSweep",
    "RwaBlock",
    "Scenario",
    "SweepSpec",
    "TwoQubitBlock",
]
