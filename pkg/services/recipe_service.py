"""
레시피 서비스 - 그림 재현 레시피를 시나리오 / 스윕으로 조립

책임:
- 캡션 파라미터 + 곡선별 덮어쓰기 병합
- 레이아웃별 펄스 배치 (캡션에 없는 값은 고정 기본값)
- 레시피 이름 해석 ("fig1", "fig1a", "fig1a/oracle")
"""

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from floquet import TrainSpec
from numerics import ParameterError
from pulses import DriveField, PulseEnvelope, QubitConfig
from repositories.recipe_repository import RecipeRepository
from repositories.schemas import (
    GridSpec,
    MagnusBlock,
    Recipe,
    RecipeCurve,
    Scenario,
    SweepSpec,
)
from resonance import ResonanceOrder

logger = logging.getLogger(__name__)

# 캡션에 없는 값의 고정 기본값
DEFAULT_PARAMETERS = {
    "epsilon0": 1.0,
    "omega": 1.0,
    "order": 1,
    "n_pulses": 1,
    "magnus_order": 2,
    "resonance_tolerance": 1e-9,
    "n_periods": 10,
    "n_points": 2001,
}
# 첫 펄스 중심 / 마지막 펄스 이후 여유 (T 단위)
LEAD_WIDTHS = 6.0

_NAME_PATTERN = re.compile(r"^(?P<recipe>fig[1-8])(?P<curve>[a-z])?(?:/(?P<mode>[a-z0-9-]+))?$")

_SWEEP_PATHS = {"amplitude": "train.amplitude", "width": "train.width"}


@dataclass
class RecipePlan:
    """레시피 이름 하나가 펼쳐진 실행 계획"""

    name: str
    scenarios: List[Scenario] = field(default_factory=list)
    sweeps: List[SweepSpec] = field(default_factory=list)


class RecipeService:
    """
    레시피 서비스

    RecipeRepository를 주입받아 레시피를 시나리오로 바꿉니다.
    """

    def __init__(self, recipe_repo: RecipeRepository):
        """
        초기화

        Args:
            recipe_repo: 레시피 Repository
        """
        self.recipe_repo = recipe_repo

    def list_recipes(self) -> List[Recipe]:
        return self.recipe_repo.find_all()

    def get_recipe(self, name: str) -> Recipe:
        """
        Raises:
            ParameterError: 레시피가 없는 경우
        """
        recipe = self.recipe_repo.find_by_name(name)
        if recipe is None:
            raise ParameterError(f"레시피를 찾을 수 없습니다: {name}")
        return recipe

    @staticmethod
    def resolve_parameters(recipe: Recipe, curve: RecipeCurve) -> Dict:
        """기본값 ← 레시피 캡션 ← 곡선 덮어쓰기 순서로 병합"""
        merged = dict(DEFAULT_PARAMETERS)
        for block in (recipe.parameters, curve.overrides):
            merged.update(block.model_dump(exclude_none=True))
        for required in ("delta", "amplitude", "width"):
            if required not in merged:
                raise ParameterError(f"레시피 {recipe.name}{curve.id}에 {required} 값이 없습니다")
        return merged

    @staticmethod
    def _pulse_period(params: Dict) -> Optional[float]:
        if "period" in params:
            return params["period"]
        if "spacing" in params:
            return params["spacing"] * params["width"]
        return None

    def _pulses(self, recipe: Recipe, params: Dict) -> List[PulseEnvelope]:
        count = {"single": 1, "two-pulse": 2}.get(recipe.layout, params["n_pulses"])
        tau = self._pulse_period(params)
        if count > 1 and tau is None:
            raise ParameterError(f"레시피 {recipe.name}: 여러 펄스에는 spacing 또는 period가 필요합니다")
        phases = params.get("phases") or [0.0] * count
        if len(phases) != count:
            raise ParameterError(f"레시피 {recipe.name}: phases {len(phases)}개, 펄스 {count}개")
        first = LEAD_WIDTHS * params["width"]
        return [
            PulseEnvelope(
                amplitude=params["amplitude"],
                center=first + k * (tau or 0.0),
                width=params["width"],
                phase=phases[k],
            )
            for k in range(count)
        ]

    def _train(self, params: Dict) -> TrainSpec:
        tau = self._pulse_period(params)
        if tau is None:
            raise ParameterError("floquet 레시피에는 spacing 또는 period가 필요합니다")
        phases = params.get("phases") or [0.0]
        return TrainSpec(
            amplitude=params["amplitude"],
            width=params["width"],
            phase=phases[0],
            period=tau,
            resonance=ResonanceOrder(order=params["order"], tolerance=params["resonance_tolerance"]),
        )

    def build_scenario(self, recipe: Recipe, curve: RecipeCurve, mode: str) -> Scenario:
        """
        레시피 곡선 하나 + 모드 하나 → 시나리오

        floquet 레이아웃의 oracle / rwa-train 모드는 기본 주기 [0, τ]에 닿는 이웃 펄스까지 포함한
        유한 펄스 열로 바꿔 계산합니다.
        """
        params = self.resolve_parameters(recipe, curve)
        qubit = QubitConfig(epsilon0=params["epsilon0"], delta=params["delta"])
        assumptions = list(recipe.assumptions) + list(curve.assumptions)
        if not math.isclose(params["resonance_tolerance"], DEFAULT_PARAMETERS["resonance_tolerance"]):
            assumptions.append(
                f"공명 허용치 완화: |ε₀ − Nω|/ε₀ ≤ {params['resonance_tolerance']} "
                f"(캡션 ω/ε₀={params['omega']}, N={params['order']} 유지)"
            )
        blocks: Dict = {"qubit": qubit}

        if recipe.layout == "floquet":
            train = self._train(params)
            t_end = params["n_periods"] * train.period
            if mode == "floquet":
                blocks["drive"] = DriveField(omega=params["omega"])
                blocks["train"] = train
            else:
                first = train.neighbor_range().start
                last = params["n_periods"] - first
                blocks["drive"] = DriveField(
                    omega=params["omega"],
                    pulses=tuple(train.pulse(k) for k in range(first, last)),
                )
        else:
            pulses = self._pulses(recipe, params)
            blocks["drive"] = DriveField(omega=params["omega"], pulses=tuple(pulses))
            t_end = pulses[-1].center + LEAD_WIDTHS * params["width"]

        if mode.startswith("rwa-") or mode == "oracle-dressed":
            blocks["resonance"] = ResonanceOrder(order=params["order"], tolerance=params["resonance_tolerance"])
        if mode == "magnus":
            blocks["magnus"] = MagnusBlock(order=params["magnus_order"], restart_area=params.get("restart_area"))

        return Scenario(
            name=f"{recipe.name}{curve.id}_{mode}",
            mode=mode,
            grid=GridSpec(t_start=0.0, t_end=t_end, n_points=params["n_points"]),
            assumptions=assumptions,
            **blocks,
        )

    def build_sweep(self, recipe: Recipe, curve: RecipeCurve) -> SweepSpec:
        """스윕 레시피 곡선 → SweepSpec (floquet 모드 기반)"""
        if recipe.sweep is None:
            raise ParameterError(f"레시피 {recipe.name}에는 스윕이 없습니다")
        base = self.build_scenario(recipe, curve, "floquet")
        return SweepSpec(
            name=f"{recipe.name}{curve.id}",
            scenario=base,
            parameter=_SWEEP_PATHS[recipe.sweep.parameter],
            values=recipe.sweep.values,
            reduction=recipe.sweep.reduction,
        )

    @staticmethod
    def curve_modes(recipe: Recipe, curve: RecipeCurve) -> List[str]:
        return list(curve.modes or recipe.modes)

    def resolve(self, name: str) -> RecipePlan:
        """
        레시피 이름 해석

        Args:
            name: "fig1" (전체 곡선), "fig1a" (곡선 a), "fig1a/oracle" (곡선 a, 한 모드)

        Raises:
            ParameterError: 이름 형식 오류, 없는 곡선 / 모드
        """
        match = _NAME_PATTERN.match(name)
        if match is None:
            raise ParameterError(f"레시피 이름 형식이 아닙니다: {name}")
        recipe = self.get_recipe(match.group("recipe"))
        curves = recipe.curves
        if match.group("curve"):
            curves = [c for c in recipe.curves if c.id == match.group("curve")]
            if not curves:
                raise ParameterError(f"레시피 {recipe.name}에 곡선 {match.group('curve')}가 없습니다")

        plan = RecipePlan(name=name)
        for curve in curves:
            if recipe.sweep is not None:
                plan.sweeps.append(self.build_sweep(recipe, curve))
                continue
            modes = self.curve_modes(recipe, curve)
            if match.group("mode"):
                if match.group("mode") not in modes:
                    raise ParameterError(f"{recipe.name}{curve.id}에 모드 {match.group('mode')}가 없습니다: {modes}")
                modes = [match.group("mode")]
            plan.scenarios.extend(self.build_scenario(recipe, curve, mode) for mode in modes)
        logger.debug(f"레시피 {name}: 시나리오 {len(plan.scenarios)}개, 스윕 {len(plan.sweeps)}개")
        return plan

    def resolve_scenario(self, name: str) -> Scenario:
        """스윕의 문자열 시나리오 참조용 (첫 번째 시나리오)"""
        plan = self.resolve(name)
        if plan.scenarios:
            return plan.scenarios[0]
        if plan.sweeps and isinstance(plan.sweeps[0].scenario, Scenario):
            return plan.sweeps[0].scenario
        raise ParameterError(f"{name}에서 시나리오를 만들 수 없습니다")

    def describe(self, recipe: Recipe) -> str:
        """레시피 캡션 파라미터 텍스트"""
        lines = [f"{recipe.name}: {recipe.title}  (layout={recipe.layout}, modes={', '.join(recipe.modes)})"]
        caption = ", ".join(f"{k}={v}" for k, v in recipe.parameters.model_dump(exclude_none=True).items())
        lines.append(f"    parameters: {caption}")
        for curve in recipe.curves:
            overrides = ", ".join(f"{k}={v}" for k, v in curve.overrides.model_dump(exclude_none=True).items())
            modes = f" [modes: {', '.join(curve.modes)}]" if curve.modes else ""
            lines.append(f"    ({curve.id}) {curve.label}: {overrides or '-'}{modes}")
        if recipe.sweep is not None:
            values = recipe.sweep.values
            lines.append(
                f"    sweep: {recipe.sweep.parameter} ∈ [{values.start}, {values.stop}] ({values.num}점), "
                f"reduction={recipe.sweep.reduction}"
            )
        for note in recipe.assumptions:
            lines.append(f"    ⚠️ {note}")
        return "\n".join(lines)

