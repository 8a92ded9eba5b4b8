"""
공명 계층 - 다중 공명 RWA 닫힌 형식 (단일 펄스, 위상 제어 두 펄스, 펄스 열)
"""

from .areas import AREA_CACHE, PulseAreaCache, bessel_envelope, pulse_area_integral, pulse_area_integrals
from .closed_forms import (
    combined_tone_exponential,
    combined_tone_reduction,
    graf_exponential,
    p2_overlapping_tones,
    p2_single_pulse,
    p2_train,
    p2_two_pulse,
    rwa_coupling,
    rwa_time_series,
    train_g_vector,
)
from .models import PulseAreaIntegral, ResonanceOrder

__all__ = [
    "AREA_CACHE",
    "PulseAreaCache",
    "bessel_envelope",
    "pulse_area_integral",
    "pulse_area_integrals",
    "combined_tone_exponential",
    "combined_tone_reduction",
    "graf_exponential",
    "p2_overlapping_tones",
    "p2_single_pulse",
    "p2_train",
    "p2_two_pulse",
    "rwa_coupling",
    "rwa_time_series",
    "train_g_vector",
    "PulseAreaIntegral",
    "ResonanceOrder",
]
