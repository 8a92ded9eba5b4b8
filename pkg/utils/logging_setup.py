"""로그 설정 (파일 + 콘솔)"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logging(log_dir: Optional[str] = "logs", level: str = "INFO") -> Optional[Path]:
    """
    루트 로거 설정

    Args:
        log_dir: 로그 디렉토리 (None이면 콘솔만)
        level: 로그 레벨 이름

    Returns:
        로그 파일 경로 (콘솔 전용이면 None)
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    formatter = logging.Formatter(LOG_FORMAT, DATE_FORMAT)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    handlers = [console_handler]

    log_file = None
    if log_dir is not None:
        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = directory / f"simulate_{timestamp}.log"
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    logging.basicConfig(level=numeric_level, handlers=handlers, force=True)

    # pandas가 불러오는 numexpr 스레드 안내 로그 숨기기
    logging.getLogger('numexpr').setLevel(logging.WARNING)

    if log_file is not None:
        logging.getLogger(__name__).info(f"로그 파일: {log_file}")
    return log_file
