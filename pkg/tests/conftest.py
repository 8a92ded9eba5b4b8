"""
pytest 공통 설정

프로젝트 루트를 import 경로에 넣고, hypothesis 프로필을 등록합니다.
HYPOTHESIS_PROFILE=fast 로 예제 수를 줄일 수 있습니다.
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("fast", max_examples=5, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

RECIPE_DIR = project_root / "recipes"


@pytest.fixture
def recipe_dir() -> Path:
    return RECIPE_DIR
