"""
실행 추적 유틸리티

단계별 소요 시간과 계산한 샘플 수를 집계합니다.
데이터 파일에는 기록하지 않고 로그/콘솔 요약에만 사용합니다.
"""

import threading
import time
from contextlib import contextmanager
from typing import Dict


class RunTracker:
    """
    단계별 실행 추적기
    """

    def __init__(self):
        """초기화"""
        self.total_seconds = 0.0
        self.stages_breakdown: Dict[str, Dict] = {}
        self.failures = 0
        self._lock = threading.Lock()

    def add_stage(self, stage: str, seconds: float, samples: int = 0) -> Dict[str, float]:
        """
        단계 기록 추가

        Args:
            stage: 단계 이름 (예: "magnus", "oracle", "sweep-point")
            seconds: 소요 시간
            samples: 계산한 격자 점 수

        Returns:
            해당 단계 누적값
        """
        with self._lock:
            self.total_seconds += seconds
            if stage not in self.stages_breakdown:
                self.stages_breakdown[stage] = {"calls": 0, "seconds": 0.0, "samples": 0}

            entry = self.stages_breakdown[stage]
            entry["calls"] += 1
            entry["seconds"] += seconds
            entry["samples"] += samples
            return dict(entry)

    @contextmanager
    def track(self, stage: str, samples: int = 0):
        """with 블록 소요 시간을 stage로 기록"""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.add_stage(stage, time.perf_counter() - start, samples)

    def add_failure(self) -> None:
        with self._lock:
            self.failures += 1

    def get_summary(self) -> Dict:
        return {
            "total_seconds": self.total_seconds,
            "failures": self.failures,
            "breakdown": self.stages_breakdown,
        }

    def print_summary(self):
        """요약 출력"""
        print("\n" + "=" * 60)
        print("📊 실행 요약")
        print("=" * 60)

        for stage, data in self.stages_breakdown.items():
            print(f"\n[{stage}]")
            print(f"  호출 횟수: {data['calls']:,}")
            print(f"  샘플 수: {data['samples']:,}")
            print(f"  소요 시간: {data['seconds']:.2f}초")

        print(f"\n⏱️ 총 소요 시간: {self.total_seconds:.2f}초")
        if self.failures:
            print(f"❌ 실패: {self.failures}건")
        print("=" * 60)
