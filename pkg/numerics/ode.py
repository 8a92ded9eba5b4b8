"""
시간 의존 Schrödinger 방정식 적분기 (오라클)

i dψ/dt = H(t) ψ 를 scipy.integrate.solve_ivp(RK45 / DOP853) 또는
고정 스텝 RK4로 적분합니다. 적분 후 노름 드리프트를 검사합니다.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import solve_ivp

from .errors import DomainError, NormDriftError, NumericError, StepUnderflowError
from .specs import OdeSpec

logger = logging.getLogger(__name__)

Hamiltonian = Callable[[float], np.ndarray]

_SCIPY_METHODS = {"rk45-adaptive": "RK45", "dop853-adaptive": "DOP853"}


@dataclass(frozen=True)
class OdeSolution:
    """샘플 시각별 상태와 노름 드리프트"""

    times: np.ndarray
    states: np.ndarray
    norm_drift: float


def _rk4_step(hamiltonian: Hamiltonian, t: float, psi: np.ndarray, h: float) -> np.ndarray:
    def rhs(s, y):
        return -1j * (hamiltonian(s) @ y)

    k1 = rhs(t, psi)
    k2 = rhs(t + h / 2, psi + h / 2 * k1)
    k3 = rhs(t + h / 2, psi + h / 2 * k2)
    k4 = rhs(t + h, psi + h * k3)
    return psi + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def _solve_rk4(hamiltonian: Hamiltonian, psi0: np.ndarray, t0: float,
               times: np.ndarray, step: float) -> np.ndarray:
    states = np.empty((times.size, psi0.size), dtype=complex)
    psi = psi0.copy()
    t = t0
    for i, target in enumerate(times):
        span = target - t
        if span > 0:
            n_steps = max(1, math.ceil(span / step - 1e-12))
            h = span / n_steps
            for k in range(n_steps):
                psi = _rk4_step(hamiltonian, t + k * h, psi, h)
            t = target
        states[i] = psi
    return states


def _solve_adaptive(hamiltonian: Hamiltonian, psi0: np.ndarray, t0: float,
                    times: np.ndarray, spec: OdeSpec) -> np.ndarray:
    t_end = float(times[-1])
    if t_end == t0:
        return np.tile(psi0, (times.size, 1))

    result = solve_ivp(
        lambda t, y: -1j * (hamiltonian(t) @ y),
        (t0, t_end),
        psi0,
        method=_SCIPY_METHODS[spec.method],
        t_eval=times,
        rtol=spec.rtol,
        atol=spec.atol,
        max_step=spec.max_step or np.inf,
    )
    if result.status == -1:
        if "step size" in result.message.lower():
            raise StepUnderflowError(f"ODE 스텝 언더플로: {result.message}")
        raise NumericError(f"ODE 적분 실패: {result.message}")
    return result.y.T.astype(complex)


def integrate_ode_trajectory(
    hamiltonian: Hamiltonian,
    psi0: ArrayLike,
    times: ArrayLike,
    spec: Optional[OdeSpec] = None,
    t0: float = 0.0,
) -> OdeSolution:
    """
    t0에서 시작해 각 샘플 시각의 상태를 계산

    Args:
        hamiltonian: t → (d, d) 에르미트 행렬
        psi0: t0에서의 초기 상태 (d,)
        times: 오름차순 샘플 시각 (모두 t0 이상)
        spec: ODE 설정
        t0: 초기 시각

    Returns:
        OdeSolution

    Raises:
        DomainError: 차원·시각이 올바르지 않거나 ‖psi0‖≠1인 경우
        StepUnderflowError: 적응형 스텝이 너무 작아진 경우
        NormDriftError: 노름 드리프트가 max_norm_drift 초과
    """
    spec = spec or OdeSpec()
    psi = np.asarray(psi0, dtype=complex).ravel()
    if psi.size != spec.dimension:
        raise DomainError(f"상태 차원 {psi.size}이 OdeSpec.dimension={spec.dimension}과 다릅니다")
    norm0 = float(np.linalg.norm(psi))
    if abs(norm0 - 1.0) > spec.max_norm_drift:
        raise DomainError(f"초기 상태가 정규화되지 않았습니다: ‖ψ0‖={norm0:.12g}")
    samples = np.atleast_1d(np.asarray(times, dtype=float))
    if samples.size == 0 or np.any(np.diff(samples) < 0) or samples[0] < t0:
        raise DomainError("샘플 시각은 t0 이상의 오름차순이어야 합니다")

    if spec.method == "rk4-fixed":
        states = _solve_rk4(hamiltonian, psi, t0, samples, spec.step)
    else:
        states = _solve_adaptive(hamiltonian, psi, t0, samples, spec)

    norms = np.linalg.norm(states, axis=1)
    drift = float(np.max(np.abs(norms - np.linalg.norm(psi))))
    if drift > spec.max_norm_drift:
        raise NormDriftError(
            f"노름 드리프트 {drift:.3e} > 허용치 {spec.max_norm_drift:.1e}",
            drift=drift,
        )
    logger.debug(f"ODE 완료: {spec.method}, 샘플 {samples.size}개, 드리프트 {drift:.2e}")
    return OdeSolution(times=samples, states=states, norm_drift=drift)


def integrate_ode(
    hamiltonian: Hamiltonian,
    psi0: ArrayLike,
    t0: float,
    t1: float,
    spec: Optional[OdeSpec] = None,
) -> np.ndarray:
    """ψ(t0) → ψ(t1)"""
    if t1 < t0:
        raise DomainError(f"t1({t1})은 t0({t0}) 이상이어야 합니다")
    solution = integrate_ode_trajectory(hamiltonian, psi0, [t1], spec, t0=t0)
    return solution.states[-1]
