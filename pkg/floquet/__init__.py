"""
Floquet 계층 - 동일 펄스 무한 열의 준에너지, 준에너지 상태, 정규 영역 조정
"""

from .models import QuasienergeticStates, QuasienergyResult, TrainSpec
from .quasienergy import (
    REGULAR_TOLERANCE,
    classify_regime,
    floquet_time_series,
    gamma_n,
    p2_train_identical,
    periodic_bessel,
    periodicity_defect,
    phi_n,
    qes_states,
    quasienergy,
    total_phase,
    tune_to_regular,
)

__all__ = [
    "QuasienergeticStates",
    "QuasienergyResult",
    "TrainSpec",
    "REGULAR_TOLERANCE",
    "classify_regime",
    "floquet_time_series",
    "gamma_n",
    "p2_train_identical",
    "periodic_bessel",
    "periodicity_defect",
    "phi_n",
    "qes_states",
    "quasienergy",
    "total_phase",
    "tune_to_regular",
]
