"""
Arithmetic factor of the ratios prediction

This module evaluates the Euler product A(alpha, gamma), its diagonal
alpha-derivative A_alpha(r, r) and the closed form of A on the
anti-diagonal. Products are accumulated in log space over the odd primes
up to a bound P and completed by a prime-number-theorem tail; the
returned budget bounds the error of that completion.
"""
import logging
import math
from typing import NamedTuple, Optional

import numpy as np
from scipy.special import exp1

from src.arith import chebyshev_theta, primes_upto
from src.config import PRIME_BOUND
from src.errors import DomainError
from src.special import zeta

logger = logging.getLogger(__name__)

CONVERGENCE_EDGE = -0.25
CONVERGENCE_MARGIN = 1e-3
_ROWS = 64


class EulerValue(NamedTuple):
    value: complex
    budget: float


def _check_region(*shifts) -> None:
    for shift in shifts:
        if np.any(np.real(shift) <= CONVERGENCE_EDGE + CONVERGENCE_MARGIN):
            raise DomainError(
                f"Euler product needs Re(shift) > {CONVERGENCE_EDGE + CONVERGENCE_MARGIN}, got {shift}"
            )


def _odd_primes(bound: int) -> np.ndarray:
    primes = primes_upto(bound)
    return primes[1:].astype(float)


def _pnt_defect(bound: int) -> float:
    """|theta(P) - P| / P, the relative error of the tail integrals."""
    return abs(chebyshev_theta(bound) - bound) / bound


def _prefactor(alpha, gamma):
    return (2.0 ** (1 + alpha + gamma) - 2.0 ** (gamma - alpha)) / (2.0 ** (1 + alpha + gamma) - 1.0)


def A_with_budget(alpha, gamma, prime_bound: Optional[int] = None) -> EulerValue:
    """
    Euler product A(alpha, gamma) with a bound for its truncation error.

    Args:
        alpha: Complex scalar or array
        gamma: Complex scalar or array broadcastable with `alpha`
        prime_bound: Largest prime in the explicit product (default PRIME_BOUND)

    Returns:
        EulerValue with the value (shape of the broadcast inputs) and the
        largest error bound over the inputs

    Raises:
        DomainError: If a real part is not above -1/4 + 1e-3
    """
    bound = int(prime_bound or PRIME_BOUND)
    a_arr, g_arr = np.broadcast_arrays(np.asarray(alpha, dtype=complex), np.asarray(gamma, dtype=complex))
    _check_region(a_arr, g_arr)
    p = _odd_primes(bound)
    log_p = np.log(p)
    flat_a, flat_g = a_arr.ravel(), g_arr.ravel()
    log_sum = np.empty(flat_a.size, dtype=complex)
    for start in range(0, flat_a.size, _ROWS):
        a = flat_a[start:start + _ROWS, None]
        g = flat_g[start:start + _ROWS, None]
        x = np.exp(-(1.0 + a + g) * log_p)
        y = np.exp(-(1.0 + 2.0 * a) * log_p) / (p + 1.0)
        log_sum[start:start + _ROWS] = np.log1p((x / (p + 1.0) - y) / (1.0 - x)).sum(axis=1)

    log_P = math.log(bound)
    tail = exp1((1.0 + flat_a + flat_g) * log_P) - exp1((1.0 + 2.0 * flat_a) * log_P)
    value = _prefactor(flat_a, flat_g) * np.exp(log_sum + tail)
    budget = float(np.max(np.abs(value * tail))) * _pnt_defect(bound) + float(bound) ** -1.5
    value = value.reshape(a_arr.shape)
    if value.ndim == 0:
        return EulerValue(complex(value), budget)
    return EulerValue(value, budget)


def A(alpha, gamma, prime_bound: Optional[int] = None):
    """A(alpha, gamma) for Re(alpha), Re(gamma) > -1/4."""
    return A_with_budget(alpha, gamma, prime_bound).value


def A_alpha_diag_with_budget(r, prime_bound: Optional[int] = None) -> EulerValue:
    """
    d/d alpha A(alpha, gamma) at alpha = gamma = r.

    The 2-adic part contributes log 2/(2^{1+2r} - 1) and each odd prime
    log p/((p+1)(p^{1+2r} - 1)); the tail over p > P is P^{-1-2r}/(1+2r).
    """
    bound = int(prime_bound or PRIME_BOUND)
    r_arr = np.asarray(r, dtype=complex)
    _check_region(r_arr)
    p = _odd_primes(bound)
    log_p = np.log(p)
    flat = r_arr.ravel()
    series = np.empty(flat.size, dtype=complex)
    for start in range(0, flat.size, _ROWS):
        s = 1.0 + 2.0 * flat[start:start + _ROWS, None]
        series[start:start + _ROWS] = (log_p / ((p + 1.0) * np.expm1(s * log_p))).sum(axis=1)
    s = 1.0 + 2.0 * flat
    tail = np.exp(-s * math.log(bound)) / s
    value = math.log(2.0) / (2.0 ** s - 1.0) + series + tail
    budget = float(np.max(np.abs(tail))) * _pnt_defect(bound) + float(bound) ** -1.5
    value = value.reshape(r_arr.shape)
    if value.ndim == 0:
        return EulerValue(complex(value), budget)
    return EulerValue(value, budget)


def A_alpha_diag(r, prime_bound: Optional[int] = None):
    """A_alpha(r, r) for Re(r) > -1/4."""
    return A_alpha_diag_with_budget(r, prime_bound).value


def A_closed_antidiagonal(r):
    """
    A(-r, r) = zeta(2)/zeta(2 - 2r) * 3 (2 - 4^r)/(4 - 4^r).

    On the anti-diagonal every odd-prime factor collapses to
    (1 - p^{2r-2})/(1 - p^{-2}), so the product is a ratio of zeta values.
    """
    r_arr = np.asarray(r, dtype=complex)
    four_r = np.exp(2.0 * r_arr * math.log(2.0))
    value = zeta(2.0) / zeta(2.0 - 2.0 * r_arr) * 3.0 * (2.0 - four_r) / (4.0 - four_r)
    return complex(value) if np.ndim(r) == 0 else value
