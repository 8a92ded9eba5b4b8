"""도구 버전 (사이드카 메타데이터에 기록)"""

__version__ = "1.0.0"
