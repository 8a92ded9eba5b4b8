"""
스윕 서비스 - 파라미터 스윕 비즈니스 로직

책임:
- 파라미터 경로(drive.pulses[0].amplitude 등)로 시나리오 변형
- 점별 병렬 실행 (asyncio Semaphore로 --jobs 제한)
- 점별 실패는 error 열에 기록하고 스윕은 계속
- 스윕 인덱스 순서로 결과 표 조립 (단일 작성자)
"""

import asyncio
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional

import pandas as pd
from pydantic import ValidationError

from numerics import ParameterError, SimulationError
from repositories.result_repository import ResultRepository
from repositories.schemas import Scenario, SweepSpec

from .scenario_service import ScenarioService

logger = logging.getLogger(__name__)

_PATH_TOKEN = re.compile(r"^(?P<key>[A-Za-z_][A-Za-z0-9_]*)(?:\[(?P<index>\d+)\])?$")


def _parse_path(path: str) -> List[tuple]:
    """'drive.pulses[0].amplitude' → [("drive", None), ("pulses", 0), ("amplitude", None)]"""
    tokens = []
    for part in path.split("."):
        match = _PATH_TOKEN.match(part)
        if match is None:
            raise ParameterError(f"잘못된 파라미터 경로: {path!r} ({part!r})")
        index = match.group("index")
        tokens.append((match.group("key"), int(index) if index is not None else None))
    return tokens


def check_parameter_path(scenario: Scenario, path: str) -> None:
    """
    Raises:
        ParameterError: 경로가 시나리오에 없는 경우
    """
    node = scenario.model_dump(mode="json")
    for key, index in _parse_path(path):
        if not isinstance(node, dict) or node.get(key) is None:
            raise ParameterError(f"시나리오에 '{path}' 경로가 없습니다 ({key})")
        node = node[key]
        if index is not None:
            if not isinstance(node, list) or index >= len(node):
                raise ParameterError(f"시나리오에 '{path}' 경로가 없습니다 ({key}[{index}])")
            node = node[index]


def apply_parameter(scenario: Scenario, path: str, value: float) -> Scenario:
    """
    시나리오의 path 위치 값을 value로 바꾼 새 시나리오

    Raises:
        ParameterError: 경로가 시나리오에 없는 경우
        ValidationError: 바꾼 값이 도메인 검증에 실패한 경우
    """
    data = scenario.model_dump(mode="json")
    tokens = _parse_path(path)
    node = data
    for depth, (key, index) in enumerate(tokens):
        last = depth == len(tokens) - 1
        if not isinstance(node, dict) or key not in node or node[key] is None:
            raise ParameterError(f"시나리오에 '{path}' 경로가 없습니다 ({key})")
        if index is None:
            if last:
                node[key] = value
            else:
                node = node[key]
            continue
        items = node[key]
        if not isinstance(items, list) or index >= len(items):
            raise ParameterError(f"시나리오에 '{path}' 경로가 없습니다 ({key}[{index}])")
        if last:
            items[index] = value
        else:
            node = items[index]
    return Scenario.model_validate(data)


class SweepService:
    """
    스윕 서비스

    ScenarioService와 ResultRepository를 주입받아 스윕 표를 만듭니다.
    """

    def __init__(
        self,
        scenario_service: ScenarioService,
        result_repo: ResultRepository,
        resolve_scenario: Optional[Callable[[str], Scenario]] = None,
    ):
        """
        초기화

        Args:
            scenario_service: 시나리오 서비스
            result_repo: 결과 Repository
            resolve_scenario: 문자열 시나리오 참조(레시피 이름, 파일 경로) 해석 함수
        """
        self.scenario_service = scenario_service
        self.result_repo = result_repo
        self.resolve_scenario = resolve_scenario

    def base_scenario(self, spec: SweepSpec) -> Scenario:
        if isinstance(spec.scenario, Scenario):
            return spec.scenario
        if self.resolve_scenario is None:
            raise ParameterError(f"시나리오 참조를 해석할 수 없습니다: {spec.scenario}")
        return self.resolve_scenario(spec.scenario)

    def _evaluate_point(self, spec: SweepSpec, base: Scenario, index: int, value: float) -> Dict:
        """한 점 계산 (실패는 error 열로)"""
        row: Dict = {"index": index, spec.parameter: value, "error": ""}
        try:
            scenario = apply_parameter(base, spec.parameter, value)
            scenario = scenario.model_copy(update={"name": f"{spec.name}_{index:03d}"})
            if spec.reduction == "full-trace":
                result = self.scenario_service.run(scenario, f"{scenario.name}.csv")
                row["trace"] = f"{scenario.name}.csv"
            else:
                result = self.scenario_service.simulate(scenario)
            row.update(self.scenario_service.reduce(result, spec.reduction))
        except (SimulationError, ValidationError) as e:
            logger.warning(f"⚠️ 스윕 점 {index} ({spec.parameter}={value}) 실패: {e}")
            self.scenario_service.tracker.add_failure()
            row["error"] = f"{type(e).__name__}: {e}".replace("\n", " ")
        return row

    async def _evaluate_async(self, spec: SweepSpec, base: Scenario, values: List[float], jobs: int) -> List[Dict]:
        semaphore = asyncio.Semaphore(jobs)
        loop = asyncio.get_running_loop()

        with ThreadPoolExecutor(max_workers=jobs) as executor:
            async def evaluate(index: int, value: float) -> Dict:
                async with semaphore:
                    return await loop.run_in_executor(executor, self._evaluate_point, spec, base, index, value)

            tasks = [evaluate(i, v) for i, v in enumerate(values)]
            return await asyncio.gather(*tasks)

    def evaluate(self, spec: SweepSpec, jobs: int = 1) -> pd.DataFrame:
        """
        스윕 표 계산 (파일 저장 없음)

        Args:
            spec: 스윕 설정
            jobs: 동시 실행 점 수

        Returns:
            스윕 인덱스 순서의 DataFrame (index, 파라미터, 축약 열..., error)
        """
        base = self.base_scenario(spec)
        values = spec.resolved_values()
        # 경로 오류는 스윕 전체 검증 실패
        check_parameter_path(base, spec.parameter)

        logger.info(f"📍 스윕 {spec.name}: {spec.parameter} {len(values)}점, jobs={jobs}, 축약={spec.reduction}")
        if jobs <= 1:
            rows = [self._evaluate_point(spec, base, i, v) for i, v in enumerate(values)]
        else:
            rows = asyncio.run(self._evaluate_async(spec, base, values, jobs))

        frame = pd.DataFrame(sorted(rows, key=lambda row: row["index"]))
        ordered = ["index", spec.parameter] + [c for c in frame.columns if c not in ("index", spec.parameter, "error")] + ["error"]
        return frame[ordered]

    def run(self, spec: SweepSpec, jobs: int = 1) -> pd.DataFrame:
        """스윕 계산 후 CSV + 사이드카 저장"""
        frame = self.evaluate(spec, jobs)
        failures = int((frame["error"] != "").sum())
        metadata = {
            "sweep": spec.model_dump(mode="json"),
            "base_scenario": self.base_scenario(spec).model_dump(mode="json"),
            "columns": list(frame.columns),
            "failures": failures,
        }
        self.result_repo.save_result(spec.output.path or f"{spec.name}.csv", frame, metadata)
        if failures:
            logger.warning(f"⚠️ 스윕 {spec.name}: {failures}/{len(frame)}점 실패 (error 열 참고)")
        return frame
