"""
다중 큐비트 계층 - 두 큐비트 Furry 해밀토니안, 1차 Magnus 전파, 4차원 오라클
"""

from .hamiltonian import (
    TWO_QUBIT_TUNNELING_PREFACTOR,
    frame_phases,
    furry_hamiltonian_2q,
    furry_matrix_from_phases,
    pauli_conjugation,
    tunneling_operator,
)
from .models import BASIS_LABELS, FourState, TwoQubitConfig, TwoQubitSeries
from .propagation import (
    lab_hamiltonian_2q,
    marginal_populations,
    propagate_2q_magnus1,
    propagate_oracle_2q,
)

__all__ = [
    "TWO_QUBIT_TUNNELING_PREFACTOR",
    "frame_phases",
    "furry_hamiltonian_2q",
    "furry_matrix_from_phases",
    "pauli_conjugation",
    "tunneling_operator",
    "BASIS_LABELS",
    "FourState",
    "TwoQubitConfig",
    "TwoQubitSeries",
    "lab_hamiltonian_2q",
    "marginal_populations",
    "propagate_2q_magnus1",
    "propagate_oracle_2q",
]
