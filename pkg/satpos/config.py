"""
Configuration module for the satpos toolkit.

Values come from the environment (prefix ``SATPOS_``) or a local ``.env``
file; every setting has a default so nothing needs to be exported.
"""
import logging

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseSettings):
    """Runtime settings."""
    model_config = SettingsConfigDict(env_prefix="SATPOS_", extra="ignore")

    log_level: str = "WARNING"

    # Cost guards
    kronecker_char_max_size: int = 10
    plethysm_max_size: int = 16

    # Index searches
    saturation_cap: int = 20

    # Stretching-function drivers
    stretch_period_bound: int = 2
    stretch_degree_bound: int = 2
    stretch_horizon: int = 6
    stretch_workers: int = 1


settings = Settings()


def configure_logging(level: str = None) -> None:
    """
    Configure root logging for an entry point.

    Args:
        level: Level name; defaults to the configured ``log_level``.
    """
    logging.basicConfig(level=(level or settings.log_level).upper(), format=LOG_FORMAT)
