"""
시뮬레이션 예외 계층

수치 실패(NumericError)와 입력 파라미터 오류(ParameterError)를 구분합니다.
CLI는 ParameterError → 종료 코드 1, NumericError → 종료 코드 2로 매핑합니다.
"""

from typing import Optional


class SimulationError(Exception):
    """모든 시뮬레이션 예외의 기반 클래스"""


class NumericError(SimulationError):
    """수치 계산 실패 (수렴 실패, 스텝 언더플로, 노름 드리프트 등)"""


class QuadratureError(NumericError):
    """
    적분 허용오차 미달

    Attributes:
        partial: 실패 시점까지의 부분 적분 추정값
        abs_error: 추정 절대 오차
    """

    def __init__(self, message: str, partial: float, abs_error: Optional[float] = None):
        super().__init__(message)
        self.partial = partial
        self.abs_error = abs_error


class StepUnderflowError(NumericError):
    """적응형 ODE 스텝이 최소 크기 이하로 줄어듦"""


class NormDriftError(NumericError):
    """상태 노름이 허용 범위를 벗어남"""

    def __init__(self, message: str, drift: float):
        super().__init__(message)
        self.drift = drift


class MatrixExponentialError(NumericError):
    """행렬 지수 계산 결과가 유한하지 않음"""


class ParameterError(SimulationError, ValueError):
    """입력 파라미터가 연산의 전제 조건을 만족하지 않음"""


class DomainError(ParameterError):
    """함수 정의역 밖의 인자 (NaN, 무한대 등)"""


class ResonanceMismatchError(ParameterError):
    """ε₀ ≠ Nω (정확 공명 조건 위반)"""


class OverlappingPulsesError(ParameterError):
    """펄스 포락선이 겹쳐 닫힌 형식 공식을 적용할 수 없음"""


class NoRootInBracketError(ParameterError):
    """탐색 구간 양 끝에서 부호가 바뀌지 않음"""
