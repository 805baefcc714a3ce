"""
Configuration module for the quadratic-density lab.

Loads environment variables and provides numerical settings for the
different components of the application, plus the parser for the flat
`key = value` run configuration file.
"""
import os
from pathlib import Path
from typing import Dict

from dotenv import load_dotenv

from src.errors import ConfigError

# Base paths
BASE_DIR = Path(__file__).parent.parent
SRC_DIR = BASE_DIR / "src"

# Load environment variables
env_path = BASE_DIR / ".env"  # Load .env from project root
load_dotenv(dotenv_path=env_path)

TOOL_VERSION: str = "1.0.0"

# Zero cache; the version is part of the cache key
QDL_CACHE_DIR: Path = Path(os.getenv("QDL_CACHE_DIR", str(BASE_DIR / ".qdl_cache")))
ZERO_EVALUATOR_VERSION: str = "theta-ray-1"

# Sieves and Euler products
PRIME_BOUND: int = int(float(os.getenv("QDL_PRIME_BOUND", "1e6")))
INTEGRAND_PRIME_BOUND: int = int(float(os.getenv("QDL_INTEGRAND_PRIME_BOUND", "2e4")))
SIEVE_MAX: int = int(float(os.getenv("QDL_SIEVE_MAX", "5e8")))
EXACT_AVERAGE_MAX_X: float = float(os.getenv("QDL_EXACT_AVERAGE_MAX_X", "1e7"))
WEIGHT_CUTOFF: float = float(os.getenv("QDL_WEIGHT_CUTOFF", "1e-16"))
# Characters with smaller weight are left out of the zero sums; their share is reported
EMPIRICAL_WEIGHT_CUTOFF: float = float(os.getenv("QDL_EMPIRICAL_WEIGHT_CUTOFF", "1e-8"))

# Zero scans
T_MAX: float = float(os.getenv("QDL_T_MAX", "60"))
D_MAX: int = int(float(os.getenv("QDL_D_MAX", "1e4")))
ZERO_BISECTION_TOL: float = float(os.getenv("QDL_ZERO_TOL", "1e-9"))
INCOMPLETE_FRACTION_MAX: float = float(os.getenv("QDL_INCOMPLETE_MAX", "0.05"))

# Test functions and quadrature
PHI_STRIP_HALF_WIDTH: float = float(os.getenv("QDL_PHI_STRIP", "5"))
TAYLOR_T0: float = float(os.getenv("QDL_TAYLOR_T0", "1e-3"))
TAYLOR_ORDER: int = int(os.getenv("QDL_TAYLOR_ORDER", "4"))
PHI_TRUNCATION: float = float(os.getenv("QDL_PHI_TRUNCATION", "1e-14"))
OSCILLATORY_TOL: float = float(os.getenv("QDL_OSCILLATORY_TOL", "1e-7"))
FOURIER_TOL: float = float(os.getenv("QDL_FOURIER_TOL", "1e-10"))
# Real-line cutoff for slowly decaying test functions, in units of mean spacing
OSCILLATORY_U_MAX: float = float(os.getenv("QDL_OSC_U_MAX", "1000"))

# Application Settings
THREADS: int = int(os.getenv("QDL_THREADS", str(os.cpu_count() or 1)))
LOG_LEVEL: str = os.getenv("QDL_LOG_LEVEL", "INFO")
DEFAULT_SEED: int = int(os.getenv("QDL_SEED", "20240101"))
BOOTSTRAP_RESAMPLES: int = int(os.getenv("QDL_BOOTSTRAP_RESAMPLES", "20"))

# Default experiment grid straddling the sigma = 1 transition
DEFAULT_SIGMA_GRID = (0.5, 0.8, 1.0, 1.2, 1.5, 2.5)

CONFIG_FILE_KEYS = {
    "command", "X", "phi", "w", "sigma", "T", "cprime", "j", "threads",
    "seed", "out", "format",
}


def load_config_file(path: Path) -> Dict[str, str]:
    """
    Parse a flat run configuration file.

    Each non-empty line is `key = value`; `#` starts a comment. There is no
    nesting and no quoting.

    Args:
        path: Path to the configuration file

    Returns:
        Mapping of keys to raw string values

    Raises:
        ConfigError: If the file is missing, a line is malformed or a key is unknown
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")

    values: Dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_FILE_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if not value:
            raise ConfigError(f"{path}:{lineno}: empty value for {key!r}")
        values[key] = value
    return values
