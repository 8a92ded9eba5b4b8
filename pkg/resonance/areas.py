"""
펄스 면적 적분 j_k(t) = ∫₀ᵗ J_N(2A_k(t')/ω) dt'

시나리오 격자 위의 j_k 배열은 (펄스, N, ω, 격자, 설정) 키로 캐시됩니다.
캐시는 완성된 배열만 삽입하므로 동시 읽기에서 부분 결과가 보이지 않습니다.
"""

import hashlib
import threading
from collections import OrderedDict
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from numerics import PanelGrid, QuadratureSpec, bessel_j, integrate
from pulses import DriveField, PulseEnvelope

from .models import PulseAreaIntegral


class PulseAreaCache:
    """j_k 배열 LRU 캐시 (스레드 안전)"""

    def __init__(self, maxsize: int = 256):
        self.maxsize = maxsize
        self._entries: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key) -> Optional[np.ndarray]:
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key, value: np.ndarray) -> None:
        value.setflags(write=False)
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self.maxsize:
                self._entries.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)


AREA_CACHE = PulseAreaCache()


def bessel_envelope(pulse: PulseEnvelope, order: int, omega: float,
                    t: ArrayLike, support_cutoff: float = 6.0) -> np.ndarray:
    """J_N(2A_k(t)/ω)"""
    return bessel_j(order, 2 * np.asarray(pulse.envelope(t, support_cutoff)) / omega)


def _running_area(pulse: PulseEnvelope, order: int, omega: float, times: np.ndarray,
                  support_cutoff: float, spec: QuadratureSpec) -> np.ndarray:
    lo, hi = pulse.support(support_cutoff)
    grid = PanelGrid.build(times, pulse.width / 8, spec.panel_nodes, extra_breaks=(lo, hi))
    values = bessel_envelope(pulse, order, omega, grid.nodes, support_cutoff)
    return grid.sample(grid.cumulative(values).at_boundaries)


def pulse_area_integrals(
    drive: DriveField,
    order: int,
    times: ArrayLike,
    spec: Optional[QuadratureSpec] = None,
    cache: Optional[PulseAreaCache] = AREA_CACHE,
) -> np.ndarray:
    """
    모든 펄스의 j_k(t), 형태 (M, m)

    Args:
        drive: 구동장
        order: 공명 차수 N
        times: 시각 (≥ 0)
        spec: 적분 설정 (panel_nodes 사용)
        cache: None이면 캐시 없이 계산
    """
    spec = spec or QuadratureSpec()
    samples = np.atleast_1d(np.asarray(times, dtype=float))
    grid_key = hashlib.sha1(samples.tobytes()).hexdigest()
    rows = []
    for pulse in drive.pulses:
        key = (pulse, order, drive.omega, drive.support_cutoff, grid_key, spec)
        area = cache.get(key) if cache is not None else None
        if area is None:
            area = _running_area(pulse, order, drive.omega, samples, drive.support_cutoff, spec)
            if cache is not None:
                cache.put(key, area)
        rows.append(area)
    if not rows:
        return np.zeros((0, samples.size))
    return np.stack(rows)


def pulse_area_integral(
    drive: DriveField,
    index: int,
    order: int,
    t_start: float,
    t_end: float,
    spec: Optional[QuadratureSpec] = None,
) -> PulseAreaIntegral:
    """한 펄스의 구간 적분 (적응형 적분)"""
    pulse = drive.pulses[index]
    lo, hi = pulse.support(drive.support_cutoff)
    a, b = max(t_start, lo), min(t_end, hi)
    value = 0.0
    if b > a:
        value = integrate(
            lambda s: bessel_envelope(pulse, order, drive.omega, s, drive.support_cutoff),
            a, b, spec,
        )
    return PulseAreaIntegral(index, order, t_start, t_end, float(value))
