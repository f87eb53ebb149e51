"""Enumeration settings loaded from the environment and .env files."""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from xmodalg.types import SearchOrder  # noqa: TC001

DEFAULT_SEARCH_LIMIT = 10**7


class Settings(BaseModel):
    """Limits and options for exhaustive enumeration."""

    model_config = ConfigDict(frozen=True)

    search_limit: int = Field(
        DEFAULT_SEARCH_LIMIT, ge=1, description="Largest search space enumerated"
    )
    workers: int = Field(1, ge=1, description="Worker processes for enumeration")
    order: SearchOrder = Field("lex", description="Order in which candidates are tried")

    @classmethod
    def from_env(cls, **overrides: int | str | None) -> Settings:
        """Load settings from a .env file and the process environment.

        Recognized variables are ``XMODALG_SEARCH_LIMIT`` and
        ``XMODALG_WORKERS``. Keyword overrides that are not None win.

        Args:
            **overrides: Explicit values, e.g. from command-line flags

        Returns:
            Validated settings
        """
        env_path = Path(".env")
        if env_path.exists():
            load_dotenv(env_path)

        values: dict[str, int | str] = {}
        limit = os.getenv("XMODALG_SEARCH_LIMIT")
        if limit:
            values["search_limit"] = int(limit)
        workers = os.getenv("XMODALG_WORKERS")
        if workers:
            values["workers"] = int(workers)
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(values)
