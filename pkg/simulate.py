"""
펄스 열 큐비트 시뮬레이터 CLI

사용법:
    python simulate.py run scenario.json              # 시나리오 파일 실행
    python simulate.py run fig1a                      # 레시피 곡선 실행 (모든 모드)
    python simulate.py run fig3b/oracle               # 레시피 곡선 한 모드만
    python simulate.py sweep sweep.json --jobs 4      # 파라미터 스윕
    python simulate.py sweep fig7                     # 레시피 스윕 (곡선 a, b)
    python simulate.py recipes                        # 레시피 목록
    python simulate.py recipes --show fig6            # 레시피 상세

공통 옵션:
    --output-dir DIR       결과 디렉토리 (기본: QUBITSIM_OUTPUT_DIR 또는 ./output)
    --jobs N               스윕 동시 실행 점 수
    --tolerance-scale S    모든 적분/ODE 허용오차에 S배
    --log-level LEVEL      로그 레벨

종료 코드:
    0: 성공
    1: 검증 실패 (시나리오 형식, 파라미터, 파일 없음)
    2: 수치 실패 (적분 / ODE)
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

# 프로젝트 루트를 Python path에 추가
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from pydantic import ValidationError

from numerics import NumericError, ParameterError
from repositories import RecipeRepository, ResultRepository, Scenario, ScenarioRepository, SweepSpec
from services import RecipeService, ScenarioService, SweepService
from utils import RunTracker, __version__, get_settings, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERIC = 2


def print_step(title: str):
    """단계 출력"""
    print("\n" + "=" * 100)
    print(f"📍 {title}")
    print("=" * 100)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output-dir", default=settings.output_dir, help="결과 디렉토리")
    common.add_argument("--recipe-dir", default=settings.recipe_dir, help="레시피 디렉토리")
    common.add_argument("--log-dir", default=settings.log_dir, help="로그 디렉토리")
    common.add_argument("--log-level", default=settings.log_level, help="로그 레벨 (DEBUG, INFO, ...)")
    common.add_argument("--jobs", type=int, default=settings.jobs, help="스윕 동시 실행 점 수")
    common.add_argument("--tolerance-scale", type=float, default=settings.tolerance_scale,
                        help="적분/ODE 허용오차 배율")

    parser = argparse.ArgumentParser(description="펄스 열 구동 큐비트 시뮬레이터")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="시나리오 파일 또는 레시피 실행")
    run.add_argument("target", help="시나리오 JSON 경로 또는 레시피 이름 (fig1, fig1a, fig1a/oracle)")

    sweep = commands.add_parser("sweep", parents=[common], help="파라미터 스윕 실행")
    sweep.add_argument("target", help="스윕 JSON 경로 또는 스윕 레시피 이름 (fig7, fig8a)")

    recipes = commands.add_parser("recipes", parents=[common], help="그림 재현 레시피 목록")
    recipes.add_argument("--show", metavar="NAME", help="레시피 하나의 곡선별 파라미터 출력")

    return parser


class Application:
    """Repository → Service 조립"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.tracker = RunTracker()
        self.result_repo = ResultRepository(args.output_dir)
        self.scenario_repo = ScenarioRepository()
        self.recipe_service = RecipeService(RecipeRepository(args.recipe_dir))
        self.scenario_service = ScenarioService(self.result_repo, self.tracker)
        self.sweep_service = SweepService(self.scenario_service, self.result_repo, self.resolve_scenario)

    def _scaled(self, scenario: Scenario) -> Scenario:
        return scenario.scaled(self.args.tolerance_scale)

    def resolve_scenario(self, reference: str) -> Scenario:
        """스윕의 문자열 시나리오 참조: 파일 경로 우선, 아니면 레시피 이름"""
        if Path(reference).is_file():
            return self.scenario_repo.load_scenario(reference)
        return self.recipe_service.resolve_scenario(reference)

    def _scaled_sweep(self, spec: SweepSpec) -> SweepSpec:
        base = self.sweep_service.base_scenario(spec)
        return spec.model_copy(update={"scenario": self._scaled(base)})

    def run(self, target: str) -> None:
        if Path(target).is_file():
            scenarios, sweeps = [self.scenario_repo.load_scenario(target)], []
        else:
            plan = self.recipe_service.resolve(target)
            scenarios, sweeps = plan.scenarios, plan.sweeps

        for scenario in scenarios:
            print_step(f"시나리오 {scenario.name} (mode={scenario.mode})")
            result = self.scenario_service.run(self._scaled(scenario))
            summary = result.metadata["summary"]
            print(f"✅ 완료: {summary}")
            for note in scenario.assumptions:
                print(f"   ⚠️ 가정: {note}")
        for spec in sweeps:
            self._run_sweep(spec)

    def _run_sweep(self, spec: SweepSpec) -> None:
        print_step(f"스윕 {spec.name} ({spec.parameter}, reduction={spec.reduction})")
        frame = self.sweep_service.run(self._scaled_sweep(spec), jobs=self.args.jobs)
        failures = int((frame["error"] != "").sum())
        print(f"✅ {len(frame) - failures}/{len(frame)}점 성공")
        if failures:
            print(f"❌ 실패 {failures}점 (error 열 참고)")

    def sweep(self, target: str) -> None:
        if Path(target).is_file():
            specs = [self.scenario_repo.load_sweep(target)]
        else:
            specs = self.recipe_service.resolve(target).sweeps
            if not specs:
                raise ParameterError(f"{target}은 스윕 레시피가 아닙니다 (run 명령을 사용하세요)")
        for spec in specs:
            self._run_sweep(spec)

    def recipes(self, show: Optional[str]) -> None:
        if show:
            print(self.recipe_service.describe(self.recipe_service.get_recipe(show)))
            return
        recipes = self.recipe_service.list_recipes()
        print(f"📁 레시피 {len(recipes)}개 ({self.args.recipe_dir})")
        for recipe in recipes:
            print(self.recipe_service.describe(recipe))


def main(argv: Optional[List[str]] = None) -> int:
    """메인 함수 (종료 코드 반환)"""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_dir, args.log_level)

    if args.jobs < 1:
        print(f"❌ --jobs는 1 이상이어야 합니다: {args.jobs}")
        return EXIT_VALIDATION
    if args.tolerance_scale <= 0:
        print(f"❌ --tolerance-scale은 양수여야 합니다: {args.tolerance_scale}")
        return EXIT_VALIDATION

    app = Application(args)
    try:
        if args.command == "run":
            app.run(args.target)
        elif args.command == "sweep":
            app.sweep(args.target)
        else:
            app.recipes(args.show)
    except ValidationError as e:
        logger.error(f"❌ 검증 실패: {e}")
        print(f"❌ 검증 실패 ({e.error_count()}건):")
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "(root)"
            print(f"   - {location}: {error['msg']}")
        return EXIT_VALIDATION
    except (ParameterError, FileNotFoundError, json.JSONDecodeError) as e:
        logger.error(f"❌ 검증 실패: {e}")
        print(f"❌ 검증 실패: {e}")
        return EXIT_VALIDATION
    except NumericError as e:
        logger.error(f"❌ 수치 계산 실패: {e}")
        print(f"❌ 수치 계산 실패: {e}")
        return EXIT_NUMERIC

    if args.command != "recipes":
        app.tracker.print_summary()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
