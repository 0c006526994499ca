"""Central configuration handling with python-dotenv support."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

PROJECT_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_ENV_FILE = PROJECT_ROOT / ".env"
DEFAULT_CACHE_DIR = PROJECT_ROOT / "data"


def load_environment(dotenv_path: Optional[Path] = None) -> None:
    """Load environment variables from .env without overriding existing values."""
    load_dotenv(dotenv_path or DEFAULT_ENV_FILE, override=False)


@dataclass
class Settings:
    """Container for typed configuration."""

    log_level: str = "INFO"
    cache_dir: str = str(DEFAULT_CACHE_DIR)
    database_url: str = ""
    ext_s_max: int = 6
    ext_degree: int = 16
    point_box: str = "-6:4,-4:6"
    cta_box: str = "0:6,-4:4,0:4"
    bockstein_max_exponent: int = 24
    chart_cell_size: int = 40

    def __post_init__(self) -> None:
        if not self.database_url:
            self.database_url = f"sqlite:///{Path(self.cache_dir) / 'ext_cache.db'}"


def load_settings(dotenv_path: Optional[Path] = None) -> Settings:
    """Load .env values then return a Settings instance."""
    load_environment(dotenv_path)
    return Settings(
        log_level=os.getenv("LOG_LEVEL", Settings.log_level),
        cache_dir=os.getenv("TRIGRADED_CACHE_DIR", Settings.cache_dir),
        database_url=os.getenv("TRIGRADED_DATABASE_URL", ""),
        ext_s_max=int(os.getenv("TRIGRADED_EXT_SMAX", str(Settings.ext_s_max))),
        ext_degree=int(os.getenv("TRIGRADED_EXT_DEGREE", str(Settings.ext_degree))),
        point_box=os.getenv("TRIGRADED_POINT_BOX", Settings.point_box),
        cta_box=os.getenv("TRIGRADED_CTA_BOX", Settings.cta_box),
        bockstein_max_exponent=int(
            os.getenv("TRIGRADED_BOCKSTEIN_MAX_EXPONENT", str(Settings.bockstein_max_exponent))
        ),
        chart_cell_size=int(
            os.getenv("TRIGRADED_CHART_CELL_SIZE", str(Settings.chart_cell_size))
        ),
    )


# Load on import so `trigraded.config.settings` is ready for use.
settings = load_settings()
