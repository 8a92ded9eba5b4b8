"""
수치 계층 - Bessel 함수, 적분, 누적 적분 격자, ODE 오라클, Pauli 행렬

상위 패키지(pulses, propagator, ...)가 공통으로 사용하는 순수 수치 도구입니다.
"""

from .cumulative import Cumulative, PanelGrid, spectral_integration_matrix
from .errors import (
    DomainError,
    MatrixExponentialError,
    NoRootInBracketError,
    NormDriftError,
    NumericError,
    OverlappingPulsesError,
    ParameterError,
    QuadratureError,
    ResonanceMismatchError,
    SimulationError,
    StepUnderflowError,
)
from .matrices import (
    IDENTITY,
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ComplexMatrix,
    as_complex_matrix,
    is_hermitian,
    pauli_vector,
    project_pauli,
)
from .ode import OdeSolution, integrate_ode, integrate_ode_trajectory
from .quadrature import gauss_legendre_rule, integrate
from .special import bessel_j, bessel_j_series
from .specs import OdeSpec, QuadratureSpec

__all__ = [
    "Cumulative",
    "PanelGrid",
    "spectral_integration_matrix",
    "DomainError",
    "MatrixExponentialError",
    "NoRootInBracketError",
    "NormDriftError",
    "NumericError",
    "OverlappingPulsesError",
    "ParameterError",
    "QuadratureError",
    "ResonanceMismatchError",
    "SimulationError",
    "StepUnderflowError",
    "IDENTITY",
    "SIGMA_MINUS",
    "SIGMA_PLUS",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "ComplexMatrix",
    "as_complex_matrix",
    "is_hermitian",
    "pauli_vector",
    "project_pauli",
    "OdeSolution",
    "integrate_ode",
    "integrate_ode_trajectory",
    "gauss_legendre_rule",
    "integrate",
    "bessel_j",
    "bessel_j_series",
    "OdeSpec",
    "QuadratureSpec",
]
