"""
실행 설정

.env 파일과 QUBITSIM_ 접두사 환경 변수에서 읽습니다. CLI 플래그가 우선합니다.
"""

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """시뮬레이터 실행 설정"""

    model_config = SettingsConfigDict(env_prefix="QUBITSIM_", env_file=".env", extra="ignore")

    output_dir: str = "./output"
    recipe_dir: str = "./recipes"
    log_dir: str = "./logs"
    log_level: str = "INFO"
    jobs: int = Field(default=1, ge=1)
    tolerance_scale: float = Field(default=1.0, gt=0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
