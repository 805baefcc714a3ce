"""
Sieves

This module provides the table-building kernels: primes up to a bound,
the Moebius function, and the odd squarefree integers that label the family.

Prime and squarefree tables cover odd numbers only and are stored one bit
per number (np.packbits). They are built segment by segment, so a sieve up
to SIEVE_MAX never holds more than one unpacked segment; consumers that do
not need every prime at once read them back in blocks with prime_blocks.
Returned arrays are read-only.
"""
import logging
import math
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from src.config import SIEVE_MAX
from src.errors import DomainError, ResourceError

logger = logging.getLogger(__name__)

# odd numbers per unpacked segment
SEGMENT = 1 << 22
# packed bytes decoded per block by the readers
BLOCK_BYTES = 1 << 18


def _check_bound(limit: int) -> None:
    if limit > SIEVE_MAX:
        raise ResourceError(
            f"Sieve bound {limit} exceeds configured maximum {SIEVE_MAX}", required=int(limit)
        )


def _small_odd_primes(limit: int) -> np.ndarray:
    """Odd primes up to a small bound (at most sqrt(SIEVE_MAX)) by a plain sieve."""
    if limit < 3:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime)[1:].astype(np.int64)


def _packed_odd_table(limit: int, progressions: Sequence[Tuple[int, int]]) -> np.ndarray:
    """
    Bit-packed flags for the odd numbers 2i + 1 <= limit.

    Every flag starts set; each (start, step) clears the indices
    start, start + step, ... of the odd-number index i.
    """
    size = (limit + 1) // 2
    chunks = []
    for lo in range(0, size, SEGMENT):
        hi = min(lo + SEGMENT, size)
        segment = np.ones(hi - lo, dtype=bool)
        for start, step in progressions:
            first = start if start >= lo else start + -(-(lo - start) // step) * step
            if first < hi:
                segment[first - lo::step] = False
        chunks.append(np.packbits(segment))
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint8)


def _set_indices(packed: np.ndarray, size: int, block_bytes: int = BLOCK_BYTES) -> Iterator[np.ndarray]:
    for b0 in range(0, packed.size, block_bytes):
        bits = np.unpackbits(packed[b0:b0 + block_bytes])
        idx = np.flatnonzero(bits).astype(np.int64) + 8 * b0
        yield idx[idx < size]


@lru_cache(maxsize=4)
def odd_prime_bits(limit: int) -> np.ndarray:
    """
    Packed primality flags of the odd numbers up to `limit`; bit i is 2i + 1.

    Raises:
        ResourceError: If `limit` exceeds the configured sieve bound
    """
    limit = int(limit)
    _check_bound(limit)
    # odd multiples of p from p^2 sit at index (p^2 - 1)/2 with step p; index 0 is 1
    progressions = [((int(p) * int(p) - 1) // 2, int(p)) for p in _small_odd_primes(math.isqrt(limit))]
    progressions.append((0, max(limit, 1)))
    table = _packed_odd_table(limit, progressions)
    table.setflags(write=False)
    logger.info(f"Sieved odd primes up to {limit} into {table.nbytes} packed bytes")
    return table


def prime_blocks(limit: int, block_bytes: int = BLOCK_BYTES) -> Iterator[np.ndarray]:
    """
    Primes up to `limit` in ascending blocks, 2 first.

    Raises:
        ResourceError: If `limit` exceeds the configured sieve bound
    """
    limit = int(limit)
    if limit < 2:
        return
    yield np.array([2], dtype=np.int64)
    for idx in _set_indices(odd_prime_bits(limit), (limit + 1) // 2, block_bytes):
        if idx.size:
            yield 2 * idx + 1


@lru_cache(maxsize=8)
def _prime_array(limit: int) -> np.ndarray:
    primes = np.concatenate(list(prime_blocks(limit)))
    primes.setflags(write=False)
    logger.info(f"Sieved {primes.size} primes up to {limit}")
    return primes


def primes_upto(limit: int) -> np.ndarray:
    """
    All primes up to `limit`, ascending.

    Args:
        limit: Inclusive upper bound

    Returns:
        Read-only int64 array of primes

    Raises:
        ResourceError: If `limit` exceeds the configured sieve bound
    """
    limit = int(limit)
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    _check_bound(limit)
    return _prime_array(limit)


def chebyshev_theta(limit: int) -> float:
    """theta(limit) = sum of log p over p <= limit."""
    return math.fsum(float(np.sum(np.log(block.astype(float)))) for block in prime_blocks(limit))


@lru_cache(maxsize=4)
def mobius_table(limit: int) -> np.ndarray:
    """Moebius values mu(0..limit); entry 0 is unused and set to 0."""
    limit = int(limit)
    _check_bound(limit)
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes_upto(limit):
        mu[p::p] *= -1
        if p * p <= limit:
            mu[p * p::p * p] = 0
    mu.setflags(write=False)
    return mu


def mobius(n: int) -> int:
    """Moebius function by trial division."""
    n = int(n)
    if n < 1:
        raise DomainError(f"mobius is defined for n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=8)
def odd_squarefree_magnitudes(limit: int) -> np.ndarray:
    """Odd squarefree m with 1 <= m <= limit, ascending."""
    limit = int(limit)
    if limit < 1:
        return np.zeros(0, dtype=np.int64)
    _check_bound(limit)
    # odd multiples of p^2 sit at index (p^2 - 1)/2 with step p^2
    progressions = [((int(p) * int(p) - 1) // 2, int(p) * int(p)) for p in _small_odd_primes(math.isqrt(limit))]
    size = (limit + 1) // 2
    table = _packed_odd_table(limit, progressions)
    magnitudes = np.concatenate([2 * idx + 1 for idx in _set_indices(table, size)])
    magnitudes.setflags(write=False)
    return magnitudes


def sieve_squarefree_odd(limit: int) -> List[int]:
    """
    Odd squarefree d with 1 <= |d| <= limit, both signs.

    Values are ordered by |d| ascending with +m before -m.
    """
    magnitudes = odd_squarefree_magnitudes(limit)
    signed = np.empty(2 * magnitudes.size, dtype=np.int64)
    signed[0::2] = magnitudes
    signed[1::2] = -magnitudes
    return signed.tolist()
