import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from src.config import DEFAULT_SEED, DEFAULT_SIGMA_GRID, THREADS, load_config_file
from src.errors import ConfigError

logger = logging.getLogger(__name__)

COMMANDS = ("predict", "expand", "empirical", "verify", "zeros", "sweep")

# file keys that differ from field names
_FILE_ALIASES = {"phi": "phi_spec", "w": "w_spec", "cprime": "c_prime", "j": "j_mode",
                 "out": "out_path", "sigma": "sigmas"}


class RunConfig(BaseModel):
    """Effective configuration of one command-line run."""
    command: Literal["predict", "expand", "empirical", "verify", "zeros", "sweep"]
    X: float = 1e6
    phi_spec: str = "fejer:1.5"
    w_spec: str = "gaussian"
    sigmas: List[float] = Field(default_factory=lambda: list(DEFAULT_SIGMA_GRID))
    T: float = 40.0
    c_prime: float = 0.1
    j_mode: Literal["exact", "asymptotic"] = "exact"
    threads: int = THREADS
    seed: int = DEFAULT_SEED
    out_path: Optional[str] = None
    format: Optional[Literal["json", "csv"]] = None
    verify_name: Optional[str] = None
    d_values: List[int] = Field(default_factory=list)
    with_empirical: bool = False

    @field_validator("X", "T")
    def validate_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("sigmas", mode="before")
    def parse_sigmas(cls, v: Any) -> List[float]:
        if isinstance(v, str):
            v = [part for part in v.split(",") if part.strip()]
        values = [float(s) for s in v]
        if not values or any(s <= 0 for s in values):
            raise ValueError("sigma list must be non-empty and positive")
        return values

    @field_validator("d_values", mode="before")
    def parse_d_values(cls, v: Any) -> List[int]:
        if isinstance(v, str):
            v = [part for part in v.split(",") if part.strip()]
        return [int(d) for d in v]

    @field_validator("j_mode", mode="before")
    def normalize_j_mode(cls, v: str) -> str:
        return "asymptotic" if v == "asym" else v

    @field_validator("threads")
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError("threads must be at least 1")
        return v

    @classmethod
    def resolve(cls, flags: Dict[str, Any], config_path: Optional[Path] = None) -> "RunConfig":
        """
        Merge command-line flags over a config file over the defaults.

        Args:
            flags: Parsed flag values; None means "not given"
            config_path: Optional flat `key = value` file

        Returns:
            The validated effective configuration

        Raises:
            ConfigError: If the merged values do not validate
        """
        merged: Dict[str, Any] = {}
        if config_path is not None:
            for key, value in load_config_file(config_path).items():
                merged[_FILE_ALIASES.get(key, key)] = value
            logger.info(f"Loaded {len(merged)} settings from {config_path}")
        merged.update({k: v for k, v in flags.items() if v is not None})
        try:
            return cls(**merged)
        except ValueError as e:
            raise ConfigError(f"Invalid configuration: {e}")

    @property
    def output_format(self) -> str:
        """Report format; tables default to CSV, single reports to JSON."""
        if self.format is not None:
            return self.format
        return "csv" if self.command == "sweep" else "json"

    def echo(self) -> Dict[str, Any]:
        """Effective config as embedded in reports."""
        return self.model_dump(exclude_none=True)
