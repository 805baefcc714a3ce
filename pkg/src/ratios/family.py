"""
Family enumeration

The family F*(X) is every odd squarefree d with weight w(d/X); both signs
of each magnitude m occur with the same weight. Every family average the
prediction needs reduces to a weighted sum over magnitudes, computed
here by exact enumeration with a deterministic parallel reduction.
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from src.arith import odd_squarefree_magnitudes
from src.config import EXACT_AVERAGE_MAX_X, THREADS
from src.errors import DomainError
from src.models import FamilyParams
from src.parallel import map_reduce
from src.testfn import WeightFunction

logger = logging.getLogger(__name__)

POWER_CHUNK = 8192


def make_family(X: float, w: WeightFunction, c_prime: float = 0.1) -> FamilyParams:
    """FamilyParams with the enumeration cutoff where w(d/X) drops below the weight cutoff."""
    return FamilyParams(X=float(X), d_cutoff=w.d_cutoff(X), c_prime=c_prime)


class FamilyEnumeration:
    """
    Odd squarefree magnitudes up to the cutoff with their weights.

    Averages are over signed d: (sum_m w(m/X) (f(m) + f(-m))) / W*.
    """

    def __init__(self, w: WeightFunction, fam: FamilyParams, threads: int = THREADS):
        self.w = w
        self.fam = fam
        self.threads = threads
        self.magnitudes = odd_squarefree_magnitudes(fam.d_cutoff)
        self.weights = w.w(self.magnitudes / fam.X)
        self.log_magnitudes = np.log(self.magnitudes.astype(float))
        self.total = 2.0 * math.fsum(self.weights)
        logger.info(
            f"Enumerated {2 * self.magnitudes.size} characters up to |d| <= {fam.d_cutoff}; "
            f"W* = {self.total:.6g}"
        )

    def __len__(self) -> int:
        return 2 * self.magnitudes.size

    def signed(self) -> Tuple[np.ndarray, np.ndarray]:
        """Signed d (ordered +m, -m) and their weights."""
        d = np.empty(2 * self.magnitudes.size, dtype=np.int64)
        d[0::2] = self.magnitudes
        d[1::2] = -self.magnitudes
        return d, np.repeat(self.weights, 2)

    def average(self, f: Callable[[np.ndarray], np.ndarray]) -> complex:
        """Weighted average of f over signed d; `f` maps an int64 array of d to values."""
        d, weights = self.signed()

        def partial(idx):
            idx = np.asarray(idx)
            return complex(np.sum(weights[idx] * f(d[idx])))

        value = map_reduce(partial, np.arange(d.size), lambda a, b: a + b,
                           chunk_size=POWER_CHUNK, threads=self.threads)
        return value / self.total

    @property
    def log_average(self) -> float:
        """Average of log|d| over the family."""
        return float(np.dot(self.weights, self.log_magnitudes) * 2.0 / self.total)

    def power_average(self, r):
        """
        Exact average of |d|^{-r} over the family, for scalar or array r.

        The matrix exp(-r log m) is formed chunk by chunk over the magnitudes.
        """
        r_arr = np.atleast_1d(np.asarray(r, dtype=complex))

        def partial(idx):
            idx = np.asarray(idx)
            kernel = np.exp(-np.outer(r_arr, self.log_magnitudes[idx]))
            return kernel @ self.weights[idx]

        sums = map_reduce(partial, np.arange(self.magnitudes.size), np.add,
                          chunk_size=POWER_CHUNK, threads=self.threads)
        value = 2.0 * sums / self.total
        return complex(value[0]) if np.ndim(r) == 0 else value.reshape(np.shape(r))


@lru_cache(maxsize=4)
def _cached_enumeration(kind: str, scale: float, X: float, d_cutoff: int, c_prime: float) -> FamilyEnumeration:
    w = WeightFunction(kind, scale)
    return FamilyEnumeration(w, FamilyParams(X=X, d_cutoff=d_cutoff, c_prime=c_prime))


def enumerate_family(w: WeightFunction, fam: FamilyParams) -> FamilyEnumeration:
    """Shared enumeration for (w, fam); rebuilt only when either changes."""
    return _cached_enumeration(w.kind, w.scale, fam.X, fam.d_cutoff, fam.c_prime)


def mellin_power_average(r, w: WeightFunction, fam: FamilyParams):
    """Main term (2/w^(0)) X^{-r} Mw(1 - r) of the family average of |d|^{-r}."""
    r_arr = np.asarray(r, dtype=complex)
    value = 2.0 / w.w_hat0 * np.exp(-r_arr * math.log(fam.X)) * w.mellin(1.0 - r_arr)
    return complex(value) if np.ndim(r) == 0 else value


def family_average_power(r, w: WeightFunction, fam: FamilyParams, method: str = "exact"):
    """
    Family average of |d|^{-r}.

    Args:
        r: Complex scalar or array with 0 <= Re(r) <= 1/2
        w: Family weight
        fam: Family scale
        method: "exact" (enumeration) or "mellin" (main term)

    Returns:
        Average with the shape of `r`

    Raises:
        DomainError: If Re(r) is outside [0, 1/2] or the method is unknown
    """
    r_arr = np.asarray(r, dtype=complex)
    if np.any(r_arr.real < 0.0) or np.any(r_arr.real > 0.5):
        raise DomainError(f"family_average_power needs 0 <= Re(r) <= 1/2, got {r}")
    if method == "mellin":
        return mellin_power_average(r, w, fam)
    if method != "exact":
        raise DomainError(f"Unknown averaging method {method!r}")
    return enumerate_family(w, fam).power_average(r)


def auto_average_method(fam: FamilyParams) -> str:
    """Exact enumeration up to EXACT_AVERAGE_MAX_X, the Mellin main term beyond."""
    if fam.X > EXACT_AVERAGE_MAX_X:
        logger.warning(
            f"X={fam.X:.3g} exceeds {EXACT_AVERAGE_MAX_X:.3g}; family averages use the Mellin main term"
        )
        return "mellin"
    return "exact"
