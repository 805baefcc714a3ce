"""
Zero finder

Locates the positive zero ordinates of L(1/2 + it, chi_{8d}) up to a
height T by scanning the Hardy Z-function for sign changes and refining
each bracket with Brent's method. Completeness is judged against the
smooth main term theta_d(T)/pi of the zero count; a mismatch triggers a
single rescan at half the step. Only complete scans are written to the
cache, and a cached list that misses the estimate is scanned again.
"""
import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from src.config import THREADS, T_MAX, ZERO_BISECTION_TOL
from src.errors import DomainError
from src.models import QuadraticCharacter, ZeroSet
from src.parallel import map_reduce
from src.zeros.cache import load_zeros, store_zeros
from src.zeros.evaluator import hardy_theta, hardy_Z

logger = logging.getLogger(__name__)

SCAN_START = 1e-6
COUNT_SLACK = 2


def zero_count_estimate(char: QuadraticCharacter, T: float) -> float:
    """(T/pi) log(8|d| T/(2 pi e)): zeros with |gamma| <= T, both signs counted."""
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    return T / math.pi * math.log(char.conductor * T / (2.0 * math.pi * math.e))


def positive_count_estimate(char: QuadraticCharacter, T: float) -> float:
    """Smooth count theta_d(T)/pi of ordinates in (0, T]."""
    return hardy_theta(char, T) / math.pi


def scan_step(char: QuadraticCharacter, T: float) -> float:
    return math.pi / (2.0 * math.log(char.conductor * (T + 3.0)))


def _scan(char: QuadraticCharacter, T: float, step: float) -> List[float]:
    grid = np.append(np.arange(SCAN_START, T, step), T)
    values = np.array([hardy_Z(char, t) for t in grid])
    ordinates = []
    for k in range(grid.size - 1):
        left, right = values[k], values[k + 1]
        if left == 0.0:
            ordinates.append(float(grid[k]))
        elif left * right < 0.0:
            root = brentq(lambda t: hardy_Z(char, t), grid[k], grid[k + 1], xtol=ZERO_BISECTION_TOL)
            ordinates.append(float(root))
    if values[-1] == 0.0:
        ordinates.append(float(grid[-1]))
    return ordinates


def find_zeros(char: QuadraticCharacter, T: float, use_cache: bool = True,
               cache_root=None) -> ZeroSet:
    """
    Positive zero ordinates of L(1/2 + it, chi_{8d}) in (0, T].

    Args:
        char: Character chi_{8d}
        T: Height, at most T_MAX
        use_cache: Read and write the zero cache

    Returns:
        ZeroSet; complete_flag is False when the count still misses the
        estimate by more than COUNT_SLACK after one rescan at half the step

    Raises:
        DomainError: If T exceeds T_MAX or is not positive
    """
    if not 0 < T <= T_MAX:
        raise DomainError(f"T must lie in (0, {T_MAX}], got {T}")
    estimate = positive_count_estimate(char, T)
    ordinates: Optional[List[float]] = load_zeros(char.d, T, cache_root) if use_cache else None
    if ordinates is not None and abs(len(ordinates) - estimate) > COUNT_SLACK:
        logger.info(f"d={char.d}: cached scan has {len(ordinates)} zeros vs estimate {estimate:.1f}; scanning again")
        ordinates = None
    if ordinates is None:
        step = scan_step(char, T)
        ordinates = _scan(char, T, step)
        if abs(len(ordinates) - estimate) > COUNT_SLACK:
            logger.info(f"d={char.d}: {len(ordinates)} zeros vs estimate {estimate:.1f}; rescanning at step {step / 2:.4f}")
            ordinates = _scan(char, T, step / 2.0)
        # only complete scans are cached
        if use_cache and abs(len(ordinates) - estimate) <= COUNT_SLACK:
            store_zeros(char.d, T, ordinates, cache_root)

    complete = abs(len(ordinates) - estimate) <= COUNT_SLACK
    if not complete:
        logger.warning(f"d={char.d}: {len(ordinates)} zeros up to T={T}, estimate {estimate:.1f}; marked incomplete")
    return ZeroSet(character=char, height=T, ordinates=ordinates, count_estimate=estimate,
                   complete_flag=complete)


def find_zeros_many(d_values: Sequence[int], T: float, threads: int = THREADS, use_cache: bool = True,
                    cache_root=None) -> List[ZeroSet]:
    """find_zeros for many characters over a worker pool; results follow the order of d_values."""
    def scan_chunk(chunk):
        return [find_zeros(QuadraticCharacter(d=int(d)), T, use_cache, cache_root) for d in chunk]

    if len(d_values) == 0:
        return []
    zero_sets = map_reduce(scan_chunk, list(d_values), lambda a, b: a + b, chunk_size=1, threads=threads)
    incomplete = sum(1 for z in zero_sets if not z.complete_flag)
    logger.info(f"Scanned {len(zero_sets)} characters up to T={T}; {incomplete} incomplete")
    return zero_sets
