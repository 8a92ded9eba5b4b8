"""
두 큐비트 전파: 구간별 1차 Magnus와 실험실 좌표 오라클
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np
from scipy import linalg

from numerics import (
    DomainError,
    MatrixExponentialError,
    OdeSpec,
    PanelGrid,
    QuadratureSpec,
    integrate_ode_trajectory,
)
from pulses import g_of_t, resolution_width

from .hamiltonian import frame_phases, furry_matrix_from_phases, tunneling_operator
from .models import SPIN_1, SPIN_2, FourState, TwoQubitConfig, TwoQubitSeries

logger = logging.getLogger(__name__)


def _panel_width(cfg: TwoQubitConfig, spec: QuadratureSpec) -> float:
    width = min(
        resolution_width(cfg.qubit1, cfg.drive1, spec),
        resolution_width(cfg.qubit2, cfg.drive2, spec),
    )
    if cfg.coupling != 0.0:
        local = max(
            cfg.qubit1.epsilon0 + 2 * cfg.drive1.total_amplitude,
            cfg.qubit2.epsilon0 + 2 * cfg.drive2.total_amplitude,
        ) + 2 * abs(cfg.coupling)
        width = min(width, 2 * math.pi / (local * spec.panels_per_period))
    return width


def _check_grid(grid: Sequence[float]) -> np.ndarray:
    times = np.asarray(grid, dtype=float)
    if times.ndim != 1 or times.size == 0 or np.any(np.diff(times) < 0) or times[0] < 0:
        raise DomainError("grid는 0 이상의 오름차순 배열이어야 합니다")
    return times


def propagate_2q_magnus1(
    cfg: TwoQubitConfig,
    grid: Sequence[float],
    initial: Optional[FourState] = None,
    spec: Optional[QuadratureSpec] = None,
    stepwise: bool = True,
) -> TwoQubitSeries:
    """
    1차 Magnus 전파

    stepwise=True: 격자 구간마다 exp(−i∫_{t_i}^{t_{i+1}} ĥ_mq) 를 곱함
    stepwise=False: exp(−i∫₀ᵗ ĥ_mq) 한 번 (단일 큐비트 1차 Magnus와 같은 근사)
    초기 상태는 t = 0 기준이고 결과는 R(t)로 실험실 좌표에 되돌립니다.

    Raises:
        MatrixExponentialError: 행렬 지수가 유한하지 않은 경우
    """
    spec = spec or QuadratureSpec()
    times = _check_grid(grid)
    initial = initial or FourState.basis("11")

    breaks = cfg.drive1.breakpoints() + cfg.drive2.breakpoints()
    panels = PanelGrid.build(times, _panel_width(cfg, spec), spec.panel_nodes, extra_breaks=breaks)
    lam1 = panels.cumulative(g_of_t(cfg.qubit1, cfg.drive1, panels.nodes))
    lam2 = panels.cumulative(g_of_t(cfg.qubit2, cfg.drive2, panels.nodes))

    h_nodes = furry_matrix_from_phases(
        lam1.at_nodes, lam2.at_nodes, cfg.coupling * panels.nodes,
        cfg.qubit1.delta, cfg.qubit2.delta,
    )
    accumulated = panels.sample(panels.cumulative(h_nodes).at_boundaries)

    if stepwise:
        increments = np.diff(accumulated, axis=0, prepend=np.zeros((1, 4, 4), dtype=complex))
        steps = linalg.expm(-1j * increments)
    else:
        steps = linalg.expm(-1j * accumulated)
    if not np.all(np.isfinite(steps)):
        raise MatrixExponentialError("4×4 행렬 지수 결과가 유한하지 않습니다")

    states = np.empty((times.size, 4), dtype=complex)
    phi = initial.amplitudes
    for i in range(times.size):
        if stepwise:
            phi = steps[i] @ phi
            states[i] = phi
        else:
            states[i] = steps[i] @ initial.amplitudes

    phases = frame_phases(panels.sample(lam1.at_boundaries), panels.sample(lam2.at_boundaries), cfg.coupling * times)
    lab = np.exp(1j * phases) * states
    drift = float(np.max(np.abs(np.linalg.norm(lab, axis=1) - 1.0)))
    logger.debug(f"2큐비트 Magnus-1: 패널 {panels.panel_count}개, 노름 드리프트 {drift:.2e}")
    return TwoQubitSeries(times=times, states=lab, extras={"norm_drift": drift})


def lab_hamiltonian_2q(cfg: TwoQubitConfig):
    """t → diag(−g₁s₁ − g₂s₂ + J s₁s₂) + κ(Δ₁σ_x⊗I + I⊗Δ₂σ_x)"""
    tunneling = tunneling_operator(cfg.qubit1.delta, cfg.qubit2.delta)
    coupling = cfg.coupling * SPIN_1 * SPIN_2

    def hamiltonian(t: float) -> np.ndarray:
        g1 = g_of_t(cfg.qubit1, cfg.drive1, t)
        g2 = g_of_t(cfg.qubit2, cfg.drive2, t)
        return np.diag(-g1 * SPIN_1 - g2 * SPIN_2 + coupling) + tunneling

    return hamiltonian


def propagate_oracle_2q(
    cfg: TwoQubitConfig,
    grid: Sequence[float],
    initial: Optional[FourState] = None,
    spec: Optional[OdeSpec] = None,
) -> TwoQubitSeries:
    """실험실 좌표 4차원 ODE 오라클 (초기 상태는 t = 0 기준)"""
    spec = (spec or OdeSpec()).model_copy(update={"dimension": 4})
    initial = initial or FourState.basis("11")
    solution = integrate_ode_trajectory(lab_hamiltonian_2q(cfg), initial.amplitudes, _check_grid(grid), spec)
    return TwoQubitSeries(times=solution.times, states=solution.states, extras={"norm_drift": solution.norm_drift})


def marginal_populations(series: TwoQubitSeries) -> tuple[np.ndarray, np.ndarray]:
    """(큐비트 1이 |2⟩일 확률, 큐비트 2가 |2⟩일 확률)"""
    pops = series.populations
    return pops[:, 2] + pops[:, 3], pops[:, 1] + pops[:, 3]
