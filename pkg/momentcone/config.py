"""
Configuration settings for momentcone.
"""

import logging
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Grid face-dimension table
    budget: int = Field(
        default=4096,
        description="Largest grid size |Z| a grid table cell may have before it is skipped",
    )
    elimination_limit: int = Field(
        default=2_000_000,
        description="Largest evaluation matrix (entries) ranked by exact elimination in auto mode",
    )

    # Randomized operations
    seed: int = Field(default=0, description="Default seed for randomized operations")
    na_max_trials: int = Field(
        default=25, description="Samples per atom count in the N_A search"
    )
    na_box: int = Field(
        default=50, description="Random points use integer coordinates in [-box, box]"
    )
    reduce_property_instances: int = Field(
        default=200, description="Instances per family in randomized reduction suites"
    )

    # Combinatorial guards
    min_atoms_max_ground: int = Field(
        default=25, description="Largest ground set accepted by the minimal-atom search"
    )

    # Server settings
    host: str = Field(default="127.0.0.1", description="Server host")
    port: int = Field(default=8000, description="Server port")

    log_level: str = Field(default="WARNING", description="Log level for the CLI")

    class Config:
        env_prefix = "MOMENTCONE_"
        env_file = ".env"

    def configure_logging(self, level: Optional[str] = None) -> None:
        """Send log records to standard error at the configured level."""
        logging.basicConfig(
            level=(level or self.log_level).upper(),
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )


# Global settings instance
settings = Settings()
