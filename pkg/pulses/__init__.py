"""
펄스 계층 - 가우시안 펄스 열 구동장과 위상 Λ(t)
"""

from .models import DriveField, PulseEnvelope, QubitConfig
from .phase import (
    LambdaMode,
    PhaseTable,
    build_phase_table,
    g_of_t,
    lambda_adiabatic,
    lambda_exact,
    overlap_check,
    resolution_width,
    rotation_axis,
    warn_if_not_adiabatic,
)

__all__ = [
    "DriveField",
    "PulseEnvelope",
    "QubitConfig",
    "LambdaMode",
    "PhaseTable",
    "build_phase_table",
    "g_of_t",
    "lambda_adiabatic",
    "lambda_exact",
    "overlap_check",
    "resolution_width",
    "rotation_axis",
    "warn_if_not_adiabatic",
]
