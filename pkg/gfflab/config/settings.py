from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Project-wide settings sourced from .env and GFFLAB_* environment variables."""

    workers: int | None = None
    green_cache_dir: Path | None = None

    dense_site_cap: int = Field(
        17_000,
        gt=0,
        description=(
            "Largest interior site count for dense Green tables and Cholesky sampling. "
            "A table holds (interior sites)^2 float64 entries, so 17_000 (N = 64) needs about 2.3 GB "
            "and 40_000 would need 12.8 GB; raise it through GFFLAB_DENSE_SITE_CAP on larger machines."
        ),
    )
    # Free-site count above which Dirichlet solves switch from sparse LU to CG.
    direct_solve_cap: int = 250_000
    solver_rtol: float = 1e-12

    model_config = SettingsConfigDict(
        env_prefix="GFFLAB_",
        env_file=(".env", ".env.local"),
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
