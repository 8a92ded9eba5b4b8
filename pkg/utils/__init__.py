"""
유틸리티 - 설정, 로그, 실행 추적
"""

from .logging_setup import setup_logging
from .run_tracker import RunTracker
from .settings import Settings, get_settings
from .version import __version__

__all__ = [
    "setup_logging",
    "RunTracker",
    "Settings",
    "get_settings",
    "__version__",
]
