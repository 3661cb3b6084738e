# positroid/core/config.py
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from typing import Dict, Any, Optional
from functools import lru_cache
import yaml  # type: ignore[import-untyped]
import os
import logging


class Settings(BaseSettings):
    # Application
    app_name: str = "Positroid Toolkit"
    debug: bool = False
    log_level: str = "WARNING"

    # Verification fan-out (only `verify` is parallel)
    verify_workers: int = Field(default=1, ge=1)

    # Default enumeration bounds per suite
    theorem_n_max: int = 8
    corollary_n_max: int = 8
    lemma_n_max: int = 7
    rank_oracle_n_max: int = 7
    axioms_n_max: int = 7
    duality_n_max: int = 6
    catalog_n_max: int = 8

    # Exhaustive path-set search gets expensive beyond this size
    brute_force_n_max: int = 10

    # networkx cross-check inside the rank-oracle suite
    gammoid_n_max: int = 6

    # Output Configuration
    output: Optional[Dict[str, Any]] = None

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
        env_prefix="POSITROID_",
    )

    @property
    def suite_bounds(self) -> Dict[str, int]:
        """Default n_max for every verification suite"""
        return {
            "theorem": self.theorem_n_max,
            "corollary": self.corollary_n_max,
            "lemma": self.lemma_n_max,
            "rank-oracle": self.rank_oracle_n_max,
            "axioms": self.axioms_n_max,
            "duality": self.duality_n_max,
        }

    @property
    def output_config(self) -> Dict[str, Any]:
        """Get output transport configuration"""
        if isinstance(self.output, dict):
            config = self.output.copy()
            config.setdefault("type", "console")
            return config
        return {"type": "console"}


@lru_cache()
def get_settings() -> Settings:
    """
    Get toolkit settings.

    Loads settings from:
    1. Environment variables (highest priority)
    2. YAML config file if CONFIG_FILE env var is set
    3. .env file (lowest priority, handled by pydantic-settings)
    """
    logger = logging.getLogger(__name__)
    config_data: Dict[str, Any] = {}

    config_file = os.getenv("CONFIG_FILE")
    if config_file and os.path.exists(config_file):
        logger.info(f"Loading config from file: {config_file}")
        with open(config_file, "r") as f:
            config_data = yaml.safe_load(f) or {}
        logger.info(f"Loaded {len(config_data)} keys from config file")
    elif config_file:
        logger.warning(f"CONFIG_FILE set to {config_file} but file does not exist")

    # Init kwargs outrank the environment in pydantic-settings, so drop
    # file keys that the environment already sets
    overridden = [
        key for key in config_data if f"POSITROID_{key.upper()}" in os.environ
    ]
    for key in overridden:
        config_data.pop(key)
    settings = Settings(**config_data)

    root = logging.getLogger()
    if settings.debug:
        root.setLevel(logging.DEBUG)
        logging.debug("Debug logging enabled by config.")
    else:
        root.setLevel(getattr(logging, settings.log_level.upper(), logging.WARNING))
    return settings
