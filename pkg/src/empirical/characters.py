"""
Character averages

Direct family averages of chi_{8d}(n) by enumeration, and the main term
they approach: prod_{p | n} p/(p+1) for odd squares n, zero otherwise.
"""
import logging
import math

import numpy as np

from src.arith import jacobi_table, primes_upto
from src.errors import DomainError
from src.models import FamilyParams
from src.ratios import enumerate_family
from src.testfn import WeightFunction

logger = logging.getLogger(__name__)


def weight_total(w: WeightFunction, fam: FamilyParams) -> float:
    """W*(X) = sum over odd squarefree d with |d| <= d_cutoff of w(d/X)."""
    return enumerate_family(w, fam).total


def _check_n(n: int) -> int:
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    return n


def char_average(n: int, w: WeightFunction, fam: FamilyParams) -> float:
    """
    Weighted family average of chi_{8d}(n).

    For odd n, chi_{8d}(n) = (2/n)(d/n) and the Jacobi symbol (d/n) only
    depends on d mod n, so one residue table serves the whole family.

    Args:
        n: Positive integer
        w: Family weight
        fam: Family scale

    Returns:
        (1/W*) sum* w(d/X) chi_{8d}(n)
    """
    n = _check_n(n)
    if n % 2 == 0:
        return 0.0
    two = 1 if n % 8 in (1, 7) else -1
    table = jacobi_table(n).astype(float)
    enumeration = enumerate_family(w, fam)
    value = enumeration.average(lambda d: two * table[np.mod(d, n)])
    logger.debug(f"char_average(n={n}) over {len(enumeration)} characters: {value.real:.6g}")
    return float(value.real)


def _prime_divisors(n: int):
    divisors = []
    for p in primes_upto(math.isqrt(n) + 1):
        p = int(p)
        if n % p == 0:
            divisors.append(p)
            while n % p == 0:
                n //= p
    if n > 1:
        divisors.append(n)
    return divisors


def char_average_main_term(n: int) -> float:
    """prod_{p | n} p/(p+1) when n is an odd square, otherwise 0."""
    n = _check_n(n)
    root = math.isqrt(n)
    if n % 2 == 0 or root * root != n:
        return 0.0
    return math.prod(p / (p + 1.0) for p in _prime_divisors(n))
