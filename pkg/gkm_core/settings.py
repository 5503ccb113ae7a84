from __future__ import annotations

import functools
import typing

import annotated_types
from pydantic import field_validator
from pydantic_settings import BaseSettings as PydanticBaseSettings, SettingsConfigDict


LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class Settings(PydanticBaseSettings):
    LOG_LEVEL: str = "WARNING"
    THREADS: typing.Annotated[int, annotated_types.Ge(1)] = 1
    DEGREE_WINDOW: typing.Annotated[int, annotated_types.Ge(1)] = 2

    @field_validator("LOG_LEVEL")
    def normalise_log_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {v!r}")
        return level

    model_config = SettingsConfigDict(
        case_sensitive=True, env_prefix="GKM_", env_file=".env"
    )


@functools.cache
def get_settings() -> Settings:
    return Settings()
