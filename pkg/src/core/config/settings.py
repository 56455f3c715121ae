"""
Configuration settings for FilterLab
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.constants import (
    DEFAULT_AUDIT_GRID_DENSITY,
    DEFAULT_GAIN_THRESHOLD,
    DEFAULT_REGION_GRID_DENSITY,
    DEFAULT_RESPONSE_POINTS,
    DEFAULT_SAMPLING_RATE_HZ,
)


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(
        env_prefix="FILTERLAB_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Execution
    threads: int = Field(default=4, ge=1)
    seed: int = Field(default=2023, ge=0)

    # Spectral analysis
    response_points: int = Field(default=DEFAULT_RESPONSE_POINTS, ge=2)
    sampling_rate_hz: float = Field(default=DEFAULT_SAMPLING_RATE_HZ, gt=0)
    gain_threshold: float = Field(default=DEFAULT_GAIN_THRESHOLD, gt=0)

    # Probing
    region_grid_density: int = Field(default=DEFAULT_REGION_GRID_DENSITY, ge=2)
    audit_grid_density: int = Field(default=DEFAULT_AUDIT_GRID_DENSITY, ge=2)

    # Reporting
    output_dir: str = Field(default="./reports")
    log_dir: str = Field(default="logs")
    log_level: str = Field(default="INFO")


# Global settings instance
settings = Settings()
