"""
Deterministic parallel map-reduce

Work is split into fixed-size chunks that do not depend on the thread
count, mapped over a thread pool, and combined by a pairwise tree
reduction in chunk order, so floating-point results are identical for any
number of workers.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from src.config import THREADS

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_CHUNK = 4096


def tree_reduce(values: List[R], combine: Callable[[R, R], R]) -> R:
    """Pairwise reduction ((v0+v1)+(v2+v3))+... in a fixed order."""
    if not values:
        raise ValueError("tree_reduce needs at least one value")
    level = list(values)
    while len(level) > 1:
        paired = [combine(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


def map_reduce(
    func: Callable[[Sequence[T]], R],
    items: Sequence[T],
    combine: Callable[[R, R], R],
    chunk_size: int = DEFAULT_CHUNK,
    threads: int = THREADS,
) -> R:
    """
    Apply `func` to fixed chunks of `items` and tree-reduce the partial results.

    Args:
        func: Maps one chunk to a partial result
        items: Sequence to split; must be non-empty
        combine: Associative combination of two partial results
        chunk_size: Chunk length, independent of `threads`
        threads: Worker count

    Returns:
        The combined result
    """
    chunks = [items[i:i + chunk_size] for i in range(0, len(items), chunk_size)]
    if len(chunks) <= 1 or threads <= 1:
        partials = [func(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(func, chunks))
    logger.debug(f"map_reduce over {len(items)} items in {len(chunks)} chunks")
    return tree_reduce(partials, combine)
