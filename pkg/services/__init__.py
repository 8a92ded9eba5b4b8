"""
Service 계층 - 비즈니스 로직 계층

Repository 계층을 조합해 시나리오 실행, 스윕, 레시피 조립을 수행합니다.
"""

from .recipe_service import RecipePlan, RecipeService
from .scenario_service import ScenarioResult, ScenarioService
from .sweep_service import SweepService, apply_parameter, check_parameter_path

__all__ = [
    "RecipePlan",
    "RecipeService",
    "ScenarioResult",
    "ScenarioService",
    "SweepService",
    "apply_parameter",
    "check_parameter_path",
]
