"""
결과 Repository - CSV + JSON 메타데이터 저장

실수는 17자리 유효숫자로 기록해 배정밀도 값을 손실 없이 되읽을 수 있게 합니다.
같은 입력이면 같은 플랫폼에서 바이트 단위로 같은 파일이 나옵니다 (타임스탬프 미기록).
"""

import json
import logging
from pathlib import Path
from typing import Dict, Tuple

import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


class ResultRepository:
    """
    결과 파일 데이터 접근 계층
    """

    def __init__(self, output_dir: str = "./output"):
        """
        초기화

        Args:
            output_dir: 결과 디렉토리 (없으면 생성)
        """
        self.output_dir = Path(output_dir)

    def _resolve(self, name: str, suffix: str) -> Path:
        path = Path(name)
        if not path.is_absolute() and path.parent == Path("."):
            path = self.output_dir / path
        if path.suffix != suffix:
            path = path.with_suffix(suffix)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def save_table(self, name: str, frame: pd.DataFrame) -> Path:
        """
        표 저장 (CSV)

        Args:
            name: 파일 이름 또는 경로 (.csv 자동 부여)
            frame: 저장할 DataFrame

        Returns:
            CSV 경로
        """
        path = self._resolve(name, ".csv")
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        return path

    def save_metadata(self, csv_path: Path, metadata: Dict) -> Path:
        """CSV 옆에 같은 이름의 .json 사이드카 저장"""
        sidecar = csv_path.with_suffix(".json")
        sidecar.write_text(
            json.dumps(metadata, ensure_ascii=False, indent=2, sort_keys=True, default=str) + "\n",
            encoding='utf-8',
        )
        return sidecar

    def save_result(self, name: str, frame: pd.DataFrame, metadata: Dict) -> Tuple[Path, Path]:
        """
        CSV와 메타데이터 사이드카를 함께 저장

        Returns:
            (CSV 경로, 사이드카 경로)
        """
        csv_path = self.save_table(name, frame)
        sidecar = self.save_metadata(csv_path, metadata)
        logger.info(f"💾 저장 완료: {csv_path} ({len(frame):,}행)")
        return csv_path, sidecar

    @staticmethod
    def load_table(path) -> pd.DataFrame:
        return pd.read_csv(path, float_precision="round_trip")
