"""
Bessel 함수

정수 차수 제1종 Bessel 함수 J_n(x). 계산은 scipy.special.jv에 맡기고,
독립 검증용으로 오름차순 급수 구현을 함께 둡니다.
"""

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from .errors import DomainError


def bessel_j(n: int, x: ArrayLike):
    """
    J_n(x) 계산 (배열 입력 지원)

    음의 차수는 J_{-n}(x) = (-1)^n J_n(x)로 처리합니다.

    Args:
        n: 정수 차수
        x: 실수 인자 (스칼라 또는 배열)

    Returns:
        x와 같은 형태의 J_n(x)

    Raises:
        DomainError: x가 유한하지 않은 경우
    """
    values = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"bessel_j 인자가 유한하지 않습니다: {x!r}")

    order = int(n)
    sign = -1.0 if (order < 0 and order % 2) else 1.0
    result = sign * special.jv(abs(order), values)

    if np.ndim(result) == 0:
        return float(result)
    return result


def bessel_j_series(n: int, x: float, terms: int = 60) -> float:
    """
    오름차순 급수 J_n(x) = Σ (-1)^m (x/2)^{2m+n} / (m! (m+n)!)

    |x| ≲ 20 범위의 기준값 용도입니다.
    """
    if not math.isfinite(x):
        raise DomainError(f"bessel_j_series 인자가 유한하지 않습니다: {x!r}")

    order = abs(int(n))
    half = x / 2.0
    partial = []
    term = half ** order / math.factorial(order)
    for m in range(terms):
        partial.append(term)
        term *= -(half * half) / ((m + 1) * (m + 1 + order))
    value = math.fsum(partial)

    if n < 0 and order % 2:
        value = -value
    return value
