"""
패널 격자 누적 적분

구간 [origin, max(times)]를 복합 Gauss–Legendre 패널로 나누고,
패널 내부 노드에서의 누적 적분을 스펙트럴 적분 행렬로 계산합니다.
요청한 출력 시각은 항상 패널 경계에 놓이므로 해당 시각의 누적값이 보간 없이 얻어집니다.

중첩 적분(∫∫, ∫∫∫)은 노드 값 → 누적 → 곱 → 누적 순으로 O(노드 수)에 계산됩니다.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np
from numpy.polynomial import legendre

from .errors import DomainError
from .quadrature import gauss_legendre_rule


@lru_cache(maxsize=64)
def spectral_integration_matrix(n: int) -> np.ndarray:
    """
    Q[i, j] = ∫_{-1}^{x_i} L_j(s) ds  (L_j: Gauss–Legendre 노드의 Lagrange 기저)
    """
    x, _ = gauss_legendre_rule(n)
    vander = legendre.legvander(x, n - 1)
    basis = np.linalg.inv(vander)
    antiderivative = legendre.legint(basis, lbnd=-1, axis=0)
    matrix = legendre.legval(x, antiderivative).T
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class Cumulative:
    """누적 적분 결과 (노드 값과 패널 경계 값)"""

    at_nodes: np.ndarray
    at_boundaries: np.ndarray


@dataclass(frozen=True)
class PanelGrid:
    """
    출력 시각을 경계로 포함하는 패널 격자

    Attributes:
        boundaries: 패널 경계 (P+1,)
        nodes: 패널별 Gauss 노드 (P, n)
        half_widths: 패널 반폭 (P,)
        sample_index: 요청 시각이 놓인 경계 인덱스 (m,)
    """

    boundaries: np.ndarray
    nodes: np.ndarray
    half_widths: np.ndarray
    sample_index: np.ndarray
    order: int

    @classmethod
    def build(
        cls,
        times: Iterable[float],
        max_width: float,
        order: int = 10,
        extra_breaks: Iterable[float] = (),
        origin: float = 0.0,
    ) -> "PanelGrid":
        """
        격자 생성

        Args:
            times: 출력 시각 (origin 이상)
            max_width: 패널 최대 폭
            order: 패널당 Gauss 노드 수
            extra_breaks: 추가 경계 (불연속점 등)
            origin: 누적 적분 시작점

        Raises:
            DomainError: 시각이 유한하지 않거나 origin보다 앞선 경우
        """
        samples = np.atleast_1d(np.asarray(times, dtype=float))
        if samples.size == 0:
            raise DomainError("출력 시각이 비어 있습니다")
        if not np.all(np.isfinite(samples)):
            raise DomainError("출력 시각에 유한하지 않은 값이 있습니다")
        if np.any(samples < origin):
            raise DomainError(f"출력 시각은 {origin} 이상이어야 합니다")
        if not (max_width > 0 and math.isfinite(max_width)):
            raise DomainError(f"패널 폭이 올바르지 않습니다: {max_width}")

        end = float(samples.max())
        extras = np.asarray(list(extra_breaks), dtype=float)
        extras = extras[(extras > origin) & (extras < end)]
        breaks = np.unique(np.concatenate([[origin], samples, extras]))

        lengths = np.diff(breaks)
        counts = np.maximum(1, np.ceil(lengths / max_width)).astype(int)
        owner = np.repeat(np.arange(lengths.size), counts)
        offsets = np.concatenate([[0], np.cumsum(counts)])
        local = np.arange(owner.size) - offsets[:-1][owner]
        left = breaks[:-1][owner] + lengths[owner] * local / counts[owner]
        boundaries = np.append(left, breaks[-1])

        x, _ = gauss_legendre_rule(order)
        half = 0.5 * np.diff(boundaries)
        mid = 0.5 * (boundaries[:-1] + boundaries[1:])
        nodes = mid[:, None] + half[:, None] * x[None, :]

        sample_index = offsets[np.searchsorted(breaks, samples)]
        return cls(boundaries, nodes, half, sample_index, order)

    @property
    def panel_count(self) -> int:
        return self.half_widths.size

    @property
    def times(self) -> np.ndarray:
        return self.boundaries[self.sample_index]

    def cumulative(self, values: np.ndarray) -> Cumulative:
        """
        ∫_origin^t v(s) ds 를 모든 노드와 경계에서 계산

        Args:
            values: 노드 값 (P, n, ...). 뒤쪽 축은 행렬 성분 등

        Returns:
            Cumulative (at_nodes: (P, n, ...), at_boundaries: (P+1, ...))
        """
        values = np.asarray(values)
        rest = values.shape[2:]
        _, weights = gauss_legendre_rule(self.order)
        q = spectral_integration_matrix(self.order)

        h_nodes = self.half_widths.reshape((-1, 1) + (1,) * len(rest))
        h_panels = self.half_widths.reshape((-1,) + (1,) * len(rest))

        within = np.einsum("ij,pj...->pi...", q, values) * h_nodes
        increments = np.einsum("j,pj...->p...", weights, values) * h_panels
        start = np.zeros((1,) + rest, dtype=np.result_type(values, float))
        at_boundaries = np.concatenate([start, np.cumsum(increments, axis=0)])
        at_nodes = at_boundaries[:-1, None, ...] + within
        return Cumulative(at_nodes=at_nodes, at_boundaries=at_boundaries)

    def sample(self, boundary_values: np.ndarray) -> np.ndarray:
        """경계 값에서 요청 시각의 값만 추출"""
        return np.asarray(boundary_values)[self.sample_index]
