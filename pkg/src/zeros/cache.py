"""
Zero cache

One CSV file per character under QDL_CACHE_DIR/v<evaluator version>/,
header `d,T,gamma`, one ordinate per row with 12 significant digits.
A scan that found no zeros is stored as a single row with an empty
gamma. Files are written to a temporary name and moved into place, so
readers only ever see complete files.
"""
import csv
import logging
import os
from pathlib import Path
from typing import List, Optional

from src.config import QDL_CACHE_DIR, ZERO_EVALUATOR_VERSION

logger = logging.getLogger(__name__)

HEADER = ("d", "T", "gamma")


def cache_dir(root: Optional[Path] = None) -> Path:
    return Path(root or QDL_CACHE_DIR) / f"v{ZERO_EVALUATOR_VERSION}"


def cache_path(d: int, root: Optional[Path] = None) -> Path:
    return cache_dir(root) / f"zeros_{d}.csv"


def load_zeros(d: int, T: float, root: Optional[Path] = None) -> Optional[List[float]]:
    """
    Cached ordinates up to T, or None when no scan up to at least T is cached.
    """
    path = cache_path(d, root)
    if not path.exists():
        return None
    try:
        with path.open(newline="") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != HEADER:
                logger.warning(f"Ignoring cache file with unexpected header: {path}")
                return None
            rows = list(reader)
    except (OSError, csv.Error) as e:
        logger.warning(f"Could not read zero cache {path}: {e}")
        return None
    if not rows:
        return None
    height = float(rows[0]["T"])
    if height < T:
        return None
    return [float(row["gamma"]) for row in rows if row["gamma"] and float(row["gamma"]) <= T]


def store_zeros(d: int, T: float, ordinates: List[float], root: Optional[Path] = None) -> Path:
    """Write the ordinates of one scan; an existing file for d is replaced."""
    path = cache_path(d, root)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".csv.tmp{os.getpid()}")
    with tmp.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(HEADER)
        if ordinates:
            for gamma in ordinates:
                writer.writerow((d, f"{T:.12g}", f"{gamma:.12g}"))
        else:
            writer.writerow((d, f"{T:.12g}", ""))
    os.replace(tmp, path)
    logger.debug(f"Cached {len(ordinates)} zeros of d={d} up to T={T} in {path}")
    return path

