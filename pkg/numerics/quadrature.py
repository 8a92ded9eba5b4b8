"""
1차원 정적분

QuadratureSpec의 method에 따라 scipy QUADPACK 또는 복합 Gauss–Legendre로 적분합니다.
진동 적분의 경우 period(반송파 주기)를 넘기면 주기 단위 분할을 강제합니다.
"""

import logging
import math
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from scipy import integrate as sp_integrate

from .errors import DomainError, QuadratureError
from .specs import QuadratureSpec

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def gauss_legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """[-1, 1] 위의 n점 Gauss–Legendre 노드와 가중치"""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    """벡터화된 f는 한 번에, 아니면 점별로 평가"""
    try:
        values = np.asarray(f(x), dtype=float)
        return np.broadcast_to(values, x.shape)
    except (TypeError, ValueError):
        return np.array([float(f(float(xi))) for xi in x.ravel()]).reshape(x.shape)


def _gauss_legendre_panels(f: Callable, a: float, b: float, panels: int, n: int) -> float:
    nodes, weights = gauss_legendre_rule(n)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = mid[:, None] + half[:, None] * nodes[None, :]
    values = _evaluate(f, x)
    return float(np.sum(half * (values @ weights)))


def _integrate_adaptive(f: Callable, a: float, b: float, spec: QuadratureSpec,
                        period: Optional[float]) -> float:
    chunks = 1 if period is None else max(1, math.ceil((b - a) / period))
    edges = np.linspace(a, b, chunks + 1)
    pieces = []
    total_error = 0.0

    for lo, hi in zip(edges[:-1], edges[1:]):
        out = sp_integrate.quad(
            f, lo, hi,
            epsabs=spec.abs_tol / chunks,
            epsrel=spec.rel_tol,
            limit=spec.max_subdivisions,
            full_output=1,
        )
        value, abs_error = out[0], out[1]
        pieces.append(value)
        total_error += abs_error
        if len(out) > 3:
            partial = math.fsum(pieces)
            logger.warning(f"⚠️ QUADPACK 경고 (구간 {lo:.6g}~{hi:.6g}, 부분값 {partial:.6g})")
            raise QuadratureError(
                f"적분 허용오차 미달 [{lo:.6g}, {hi:.6g}]: {out[3]}",
                partial=partial,
                abs_error=total_error,
            )

    return math.fsum(pieces)


def _integrate_gauss_legendre(f: Callable, a: float, b: float, spec: QuadratureSpec,
                              period: Optional[float]) -> float:
    panels = 1
    if period is not None:
        panels = max(1, math.ceil((b - a) * spec.panels_per_period / period))
    limit = max(spec.max_subdivisions, 16 * panels)

    previous = _gauss_legendre_panels(f, a, b, panels, spec.panel_nodes)
    while 2 * panels <= limit:
        panels *= 2
        current = _gauss_legendre_panels(f, a, b, panels, spec.panel_nodes)
        if abs(current - previous) <= max(spec.abs_tol, spec.rel_tol * abs(current)):
            return current
        previous = current

    raise QuadratureError(
        f"복합 Gauss–Legendre 미수렴 (패널 {panels}개)",
        partial=previous,
    )


def integrate(
    f: Callable,
    a: float,
    b: float,
    spec: Optional[QuadratureSpec] = None,
    period: Optional[float] = None,
) -> float:
    """
    ∫_a^b f(x) dx

    Args:
        f: 피적분 함수 (gauss-legendre-composite는 배열 입력을 권장)
        a: 하한
        b: 상한 (a > b이면 부호 반전)
        spec: 적분 설정 (기본값 QuadratureSpec())
        period: 진동 주기. 주어지면 주기당 최소 패널 수를 보장

    Returns:
        적분값

    Raises:
        DomainError: 구간 끝이 유한하지 않은 경우
        QuadratureError: 허용오차를 만족하지 못한 경우 (부분 추정값 포함)
    """
    spec = spec or QuadratureSpec()
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"적분 구간이 유한하지 않습니다: [{a}, {b}]")
    if period is not None and period <= 0:
        raise DomainError(f"period는 양수여야 합니다: {period}")
    if a == b:
        return 0.0
    if a > b:
        return -integrate(f, b, a, spec, period)

    if spec.method == "adaptive-quadpack":
        return _integrate_adaptive(f, a, b, spec, period)
    return _integrate_gauss_legendre(f, a, b, spec, period)
