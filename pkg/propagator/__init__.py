"""
전파자 계층 - Furry 표현 Magnus 전파자(1~3차)와 실험실 좌표 ODE 오라클
"""

from .magnus import (
    DEFAULT_RESTART_AREA,
    THIRD_ORDER_WARN_WINDOW,
    apply_rotation,
    coupling_matrices,
    furry_hamiltonian,
    g_vector,
    magnus_third_correction,
    propagate_magnus,
    restart_points,
    rotation_matrix,
    rotation_vector_of,
    rotation_vector_series,
    su2_matrices,
    third_order_series,
)
from .models import GVector, QubitState, TimeSeries
from .oracle import dressed_basis, dressed_qubit, lab_hamiltonian, propagate_oracle, propagate_oracle_dressed

__all__ = [
    "DEFAULT_RESTART_AREA",
    "THIRD_ORDER_WARN_WINDOW",
    "apply_rotation",
    "coupling_matrices",
    "furry_hamiltonian",
    "g_vector",
    "magnus_third_correction",
    "propagate_magnus",
    "restart_points",
    "rotation_matrix",
    "rotation_vector_of",
    "rotation_vector_series",
    "su2_matrices",
    "third_order_series",
    "GVector",
    "QubitState",
    "TimeSeries",
    "dressed_basis",
    "dressed_qubit",
    "lab_hamiltonian",
    "propagate_oracle",
    "propagate_oracle_dressed",
]
