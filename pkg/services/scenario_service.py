"""
시나리오 서비스 - 시나리오 실행 비즈니스 로직

책임:
- 모드별 전파기 호출 (oracle, oracle-dressed, magnus, rwa-*, floquet, two-qubit)
- 결과 표(DataFrame)와 메타데이터 구성
- ResultRepository를 통한 CSV + 사이드카 저장
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from floquet import classify_regime, floquet_time_series, quasienergy
from multiqubit import (
    BASIS_LABELS,
    FourState,
    marginal_populations,
    propagate_2q_magnus1,
    propagate_oracle_2q,
)
from numerics import ParameterError
from propagator import QubitState, TimeSeries, propagate_magnus, propagate_oracle, propagate_oracle_dressed
from repositories.result_repository import ResultRepository
from repositories.schemas import Reduction, Scenario
from resonance import (
    p2_overlapping_tones,
    p2_single_pulse,
    p2_train,
    p2_two_pulse,
    rwa_time_series,
)
from utils.run_tracker import RunTracker
from utils.version import __version__

logger = logging.getLogger(__name__)

TOOL_NAME = "qubit-pulse-sim"

SINGLE_QUBIT_COLUMNS = ["t", "p2", "re_c1", "im_c1", "re_c2", "im_c2"]


@dataclass
class ScenarioResult:
    """실행 결과 (저장 전)"""

    scenario: Scenario
    frame: pd.DataFrame
    metadata: Dict = field(default_factory=dict)

    @property
    def p2(self) -> np.ndarray:
        return self.frame["p2"].to_numpy()


def _series_frame(series: TimeSeries, p2: Optional[np.ndarray] = None) -> pd.DataFrame:
    return pd.DataFrame({
        "t": series.times,
        "p2": series.p2 if p2 is None else np.clip(np.asarray(p2, dtype=float), 0.0, 1.0),
        "re_c1": series.c1.real,
        "im_c1": series.c1.imag,
        "re_c2": series.c2.real,
        "im_c2": series.c2.imag,
    })


class ScenarioService:
    """
    시나리오 서비스

    Repository 계층을 주입받아 시나리오를 계산하고 저장합니다.
    """

    def __init__(self, result_repo: ResultRepository, tracker: Optional[RunTracker] = None):
        """
        초기화

        Args:
            result_repo: 결과 Repository
            tracker: 실행 추적기 (없으면 새로 생성)
        """
        self.result_repo = result_repo
        self.tracker = tracker or RunTracker()

    # ------------------------------------------------------------------
    # 계산
    # ------------------------------------------------------------------

    def simulate(self, scenario: Scenario) -> ScenarioResult:
        """
        시나리오 계산 (파일 저장 없음)

        Raises:
            ParameterError: 모드와 파라미터가 맞지 않는 경우 (공명 불일치, 겹치는 펄스 등)
            NumericError: 적분 / ODE 실패
        """
        times = scenario.grid.times()
        handlers = {
            "oracle": self._run_oracle,
            "oracle-dressed": self._run_oracle_dressed,
            "magnus": self._run_magnus,
            "rwa-single": self._run_rwa,
            "rwa-two-pulse": self._run_rwa,
            "rwa-train": self._run_rwa,
            "floquet": self._run_floquet,
            "two-qubit": self._run_two_qubit,
        }
        with self.tracker.track(scenario.mode, samples=times.size):
            frame, extra = handlers[scenario.mode](scenario, times)

        metadata = self._metadata(scenario, frame)
        metadata.update(extra)
        return ScenarioResult(scenario=scenario, frame=frame, metadata=metadata)

    def _initial_state(self, scenario: Scenario) -> QubitState:
        if scenario.initial is None:
            return QubitState.ground()
        return QubitState.from_pairs(scenario.initial)

    def _run_oracle(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        series = propagate_oracle(
            scenario.qubit, scenario.drive, times, self._initial_state(scenario), scenario.ode
        )
        return _series_frame(series), {"norm_drift": series.extras["norm_drift"]}

    def _run_oracle_dressed(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        """p2는 dressed basis 들뜬 상태 점유율"""
        series = propagate_oracle_dressed(
            scenario.qubit,
            scenario.drive,
            times,
            scenario.resonance.order,
            self._initial_state(scenario),
            scenario.ode,
        )
        return _series_frame(series), {
            "norm_drift": series.extras["norm_drift"],
            "epsilon0_dressed": series.extras["epsilon0_dressed"],
        }

    def _run_magnus(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        series = propagate_magnus(
            scenario.qubit,
            scenario.drive,
            times,
            order=scenario.magnus.order,
            lambda_mode=scenario.magnus.lambda_mode,
            initial=self._initial_state(scenario),
            spec=scenario.quadrature,
            restart_area=scenario.magnus.restart_area,
        )
        frame = _series_frame(series)
        frame["gz"] = series.extras["gz"]
        frame["rho_z"] = series.extras["rho_z"]
        return frame, {"norm_error": series.norm_error}

    def _run_rwa(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        """RWA 닫힌 형식: 진폭은 RWA 회전 벡터, p2는 닫힌 형식 값 (바닥 상태 출발일 때)"""
        qubit, drive, order, spec = scenario.qubit, scenario.drive, scenario.resonance, scenario.quadrature
        combination = scenario.rwa.combination
        series = rwa_time_series(
            qubit, drive, order, times, spec,
            combination=combination,
            initial=self._initial_state(scenario),
        )

        closed_form = {
            "rwa-single": p2_single_pulse,
            "rwa-two-pulse": p2_two_pulse,
            "rwa-train": p2_overlapping_tones if combination == "combined" else p2_train,
        }[scenario.mode]
        p2 = closed_form(qubit, drive, order, times, spec) if scenario.initial is None else None
        return _series_frame(series, p2), {"resonance_detuning": order.detuning(qubit, drive.omega)}

    def _run_floquet(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        if scenario.initial is not None and not np.allclose(
            QubitState.from_pairs(scenario.initial).as_array(), QubitState.ground().as_array()
        ):
            raise ParameterError("floquet 모드는 바닥 상태 |1⟩ 출발만 지원합니다 (initial)")
        if scenario.drive.pulses:
            logger.info("floquet 모드: drive.pulses는 무시하고 train 블록을 사용합니다")

        omega, train, spec = scenario.drive.omega, scenario.train, scenario.quadrature
        energies = quasienergy(train, scenario.qubit, omega, spec)
        series = floquet_time_series(train, scenario.qubit, omega, times, spec)
        frame = _series_frame(series)
        frame["phi"] = series.extras["phi"]
        frame["g_total"] = series.extras["g_total"]
        extra = {
            "quasienergy": {
                "gamma_n": energies.gamma_n,
                "e_n": energies.e_n,
                "e_plus": energies.e_plus,
                "e_minus": energies.e_minus,
                "e1": energies.e1,
                "e2": energies.e2,
                "e_n_tau_over_pi": energies.e_n * train.period / np.pi,
            },
            "regime": classify_regime(train, scenario.qubit, omega, spec),
        }
        return frame, extra

    def _run_two_qubit(self, scenario: Scenario, times: np.ndarray) -> Tuple[pd.DataFrame, Dict]:
        block = scenario.two_qubit
        initial = FourState.from_pairs(scenario.initial) if scenario.initial is not None else None
        if block.method == "oracle":
            series = propagate_oracle_2q(block, times, initial, scenario.ode)
        else:
            series = propagate_2q_magnus1(
                block, times, initial, scenario.quadrature, stepwise=block.method == "magnus1"
            )

        columns: Dict[str, np.ndarray] = {"t": series.times}
        pops = series.populations
        for i, label in enumerate(BASIS_LABELS):
            columns[f"p{label}"] = pops[:, i]
        for i, label in enumerate(BASIS_LABELS):
            columns[f"re_a{label}"] = series.states[:, i].real
            columns[f"im_a{label}"] = series.states[:, i].imag
        q1, q2 = marginal_populations(series)
        columns["p2_q1"] = q1
        columns["p2_q2"] = q2
        return pd.DataFrame(columns), {"norm_drift": series.extras["norm_drift"]}

    def _metadata(self, scenario: Scenario, frame: pd.DataFrame) -> Dict:
        """사이드카 메타데이터 (해석된 전체 파라미터, 도구 버전, 수치 설정)"""
        summary: Dict = {"rows": len(frame)}
        p2_column = "p2" if "p2" in frame else "p22"
        if p2_column in frame:
            summary[f"max_{p2_column}"] = float(frame[p2_column].max())
            summary[f"final_{p2_column}"] = float(frame[p2_column].iloc[-1])
        return {
            "tool": TOOL_NAME,
            "version": __version__,
            "mode": scenario.mode,
            "columns": list(frame.columns),
            "scenario": scenario.model_dump(mode="json"),
            "assumptions": list(scenario.assumptions),
            "summary": summary,
        }

    # ------------------------------------------------------------------
    # 축약 / 저장
    # ------------------------------------------------------------------

    @staticmethod
    def reduce(result: ScenarioResult, reduction: Reduction) -> Dict[str, float]:
        """
        스윕 축약값

        Args:
            result: 시나리오 결과
            reduction: max_p2 / final_p2 / quasienergy / full-trace

        Returns:
            열 이름 → 값 (full-trace는 축약 없이 max/final 둘 다)

        Raises:
            ParameterError: quasienergy 축약을 floquet 이외 모드에 요청한 경우
        """
        if reduction == "quasienergy":
            energies = result.metadata.get("quasienergy")
            if energies is None:
                raise ParameterError(f"quasienergy 축약은 floquet 모드에서만 가능합니다: {result.scenario.mode}")
            return {"e_n": energies["e_n"], "e1": energies["e1"], "e2": energies["e2"]}

        column = "p2" if "p2" in result.frame else "p22"
        values = result.frame[column].to_numpy()
        if reduction == "max_p2":
            return {"max_p2": float(values.max())}
        if reduction == "final_p2":
            return {"final_p2": float(values[-1])}
        return {"max_p2": float(values.max()), "final_p2": float(values[-1])}

    def output_name(self, scenario: Scenario) -> str:
        return scenario.output.path or f"{scenario.name}.csv"

    def run(self, scenario: Scenario, output_name: Optional[str] = None) -> ScenarioResult:
        """
        시나리오 계산 후 CSV + 사이드카 저장

        Returns:
            ScenarioResult (metadata에 csv/sidecar 경로는 넣지 않음)
        """
        logger.info(f"📍 시나리오 실행: {scenario.name} (mode={scenario.mode}, 샘플 {scenario.grid.n_points:,}개)")
        result = self.simulate(scenario)
        self.result_repo.save_result(output_name or self.output_name(scenario), result.frame, result.metadata)
        return result

    def run_many(self, scenarios: List[Scenario]) -> List[ScenarioResult]:
        return [self.run(scenario) for scenario in scenarios]
