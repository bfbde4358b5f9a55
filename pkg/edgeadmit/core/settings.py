import os
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parent.parent.parent


class SettingsBase(BaseSettings):
    """Base class for all settings groups."""
    model_config = SettingsConfigDict(
        env_file=os.path.join(BASE_DIR, '.env'),
        extra='ignore'
    )


class AppSettings(SettingsBase):
    """Application-level settings."""
    logging_config_path: Path = BASE_DIR / "logging.ini"


class SolverSettings(SettingsBase):
    """Budgets for the exact solvers and the brute-force oracles."""
    search_budget: int = Field(default=1_000_000, ge=1)
    isomorphism_vertex_limit: int = Field(default=12, ge=1)
    brute_force_edge_limit: int = Field(default=20, ge=1)
    brute_force_total_edge_limit: int = Field(default=30, ge=1)
    brute_force_vertex_limit: int = Field(default=8, ge=1)
    decomposition_step_factor: int = Field(default=1, ge=1)


class GameSettings(SettingsBase):
    """Settings for game playouts."""
    max_rounds_factor: int = Field(default=10, ge=1)


class Settings(BaseSettings):
    """Root settings object."""
    app: AppSettings = Field(default_factory=AppSettings)
    solver: SolverSettings = Field(default_factory=SolverSettings)
    game: GameSettings = Field(default_factory=GameSettings)


@lru_cache
def get_settings() -> Settings:
    return Settings()
