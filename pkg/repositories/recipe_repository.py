"""
레시피 Repository - recipes/*.json 접근

책임:
- 레시피 디렉토리 스캔
- 레시피 JSON 로드 및 스키마 검증
"""

import json
from pathlib import Path
from typing import List, Optional

from .schemas import Recipe


class RecipeRepository:
    """
    그림 재현 레시피 데이터 접근 계층

    파일 읽기와 검증만 수행하며, 시나리오 조립은 RecipeService가 담당합니다.
    """

    def __init__(self, recipe_dir: str = "./recipes"):
        """
        초기화

        Args:
            recipe_dir: 레시피 JSON 디렉토리
        """
        self.recipe_dir = Path(recipe_dir)

    def _load(self, path: Path) -> Recipe:
        with open(path, 'r', encoding='utf-8') as f:
            return Recipe.model_validate(json.load(f))

    def find_all(self) -> List[Recipe]:
        """
        전체 레시피 조회 (이름순)

        Returns:
            Recipe 리스트 (디렉토리가 없으면 빈 리스트)
        """
        if not self.recipe_dir.is_dir():
            return []
        return [self._load(path) for path in sorted(self.recipe_dir.glob("fig*.json"))]

    def find_by_name(self, name: str) -> Optional[Recipe]:
        """
        이름으로 조회

        Args:
            name: 레시피 이름 (예: "fig1")

        Returns:
            Recipe 또는 None
        """
        path = self.recipe_dir / f"{name}.json"
        if not path.is_file():
            return None
        return self._load(path)
