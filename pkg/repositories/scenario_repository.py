"""
시나리오 Repository - 시나리오 / 스윕 JSON 파일 접근
"""

import json
from pathlib import Path
from typing import Union

from .schemas import Scenario, SweepSpec


class ScenarioRepository:
    """시나리오·스윕 파일 읽기/쓰기"""

    def _read_json(self, path: Union[str, Path]) -> dict:
        """
        Raises:
            FileNotFoundError: 파일이 없는 경우
            json.JSONDecodeError: JSON 형식 오류
        """
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def load_scenario(self, path: Union[str, Path]) -> Scenario:
        return Scenario.model_validate(self._read_json(path))

    def load_sweep(self, path: Union[str, Path]) -> SweepSpec:
        """
        스윕 파일 로드

        scenario가 문자열 경로이면 스윕 파일 위치 기준 상대 경로로 바꿔 둡니다.
        """
        data = self._read_json(path)
        reference = data.get("scenario")
        if isinstance(reference, str) and reference.endswith(".json"):
            candidate = Path(path).parent / reference
            if candidate.is_file():
                data["scenario"] = str(candidate)
        return SweepSpec.model_validate(data)

    @staticmethod
    def dump_scenario(scenario: Scenario) -> str:
        """검증된 시나리오를 다시 JSON 문자열로 (재검증하면 같은 값)"""
        return json.dumps(scenario.model_dump(mode="json"), ensure_ascii=False, indent=2, sort_keys=True)

    def save_scenario(self, scenario: Scenario, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dump_scenario(scenario) + "\n", encoding='utf-8')
        return path
