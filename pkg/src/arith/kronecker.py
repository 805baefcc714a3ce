"""
Kronecker symbol

Binary reciprocity evaluation of the Kronecker symbol (no factorization)
and vectorized character tables for chi_{8d}.
"""
from functools import lru_cache

import numpy as np

# (2/a) indexed by a mod 8
_TWO_TABLE = (0, 1, 0, -1, 0, -1, 0, 1)


def kronecker(m: int, n: int) -> int:
    """
    Kronecker symbol (m/n).

    Args:
        m: Any integer
        n: Any integer; chi_{8d}(n) is kronecker(8*d, n)

    Returns:
        -1, 0 or 1
    """
    a, b = int(m), int(n)
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0

    v = 0
    while b % 2 == 0:
        v += 1
        b //= 2
    k = 1 if v % 2 == 0 else _TWO_TABLE[a & 7]
    if b < 0:
        b = -b
        if a < 0:
            k = -k

    while True:
        if a == 0:
            return k if b == 1 else 0
        v = 0
        while a % 2 == 0:
            v += 1
            a //= 2
        if v % 2 == 1:
            k *= _TWO_TABLE[b & 7]
        if a & b & 2:
            k = -k
        r = abs(a)
        a = b % r
        b = r


@lru_cache(maxsize=256)
def jacobi_table(m: int) -> np.ndarray:
    """Jacobi symbols (r/m) for r = 0..m-1, m odd positive."""
    table = np.array([kronecker(r, m) for r in range(m)], dtype=np.int8)
    table.setflags(write=False)
    return table


def character_table(d: int, n_max: int) -> np.ndarray:
    """
    chi_{8d}(n) for n = 1..n_max.

    For odd n, (8d/n) = (2/n) (sign(d)/n) (|d|/n) and (|d|/n) follows from
    reciprocity and a residue table mod |d|.
    """
    n = np.arange(1, n_max + 1, dtype=np.int64)
    m = abs(int(d))
    two = np.where((n % 8 == 1) | (n % 8 == 7), 1, -1)
    sign = np.where((d < 0) & (n % 4 == 3), -1, 1)
    flip = np.where((m % 4 == 3) & (n % 4 == 3), -1, 1)
    base = jacobi_table(m)[n % m].astype(np.int64) if m > 1 else np.ones_like(n)
    values = two * sign * flip * base
    values[n % 2 == 0] = 0
    return values.astype(np.int8)
