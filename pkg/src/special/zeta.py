"""
Riemann zeta by Euler-Maclaurin summation

This module evaluates zeta(s) and zeta'(s) for arrays of complex s with
an Euler-Maclaurin expansion: a direct head sum of N - 1 terms, the
integral and boundary terms, and ten Bernoulli corrections. N grows with
|s| so that the first omitted correction stays below double precision.
"""
import logging
import math
from functools import lru_cache

import numpy as np
from scipy.special import bernoulli, factorial

from src.errors import DomainError, PoleError

logger = logging.getLogger(__name__)

EULER_GAMMA = float(np.euler_gamma)
CORRECTION_TERMS = 10
MIN_HEAD_TERMS = 30
_BLOCK = 256


@lru_cache(maxsize=1)
def _bernoulli_coefficients() -> np.ndarray:
    """B_{2k}/(2k)! for k = 1..CORRECTION_TERMS."""
    b = bernoulli(2 * CORRECTION_TERMS)
    k = np.arange(1, CORRECTION_TERMS + 1)
    return b[2 * k] / factorial(2 * k, exact=False)


def _head_length(s: np.ndarray) -> int:
    return MIN_HEAD_TERMS + int(math.ceil(float(np.max(np.abs(s))))) + 10


def _zeta_block(s: np.ndarray, with_derivative: bool):
    n_terms = _head_length(s)
    n = np.arange(1, n_terms, dtype=float)
    log_n = np.log(n)
    powers = np.exp(-np.outer(s, log_n))
    zeta = powers.sum(axis=1)
    dzeta = -(powers * log_n).sum(axis=1) if with_derivative else None

    big_n = float(n_terms)
    log_big_n = math.log(big_n)
    n_pow = np.exp(-s * log_big_n)
    tail = big_n * n_pow / (s - 1.0)
    zeta = zeta + tail + 0.5 * n_pow
    if with_derivative:
        dzeta = dzeta - log_big_n * tail - tail / (s - 1.0) - 0.5 * log_big_n * n_pow

    # poch = s (s+1) ... (s+2k-2) and its s-derivative, built incrementally
    poch = s.astype(complex)
    dpoch = np.ones_like(poch)
    coefficients = _bernoulli_coefficients()
    for k in range(1, CORRECTION_TERMS + 1):
        scale = np.exp(-(s + 2 * k - 1) * log_big_n)
        zeta = zeta + coefficients[k - 1] * poch * scale
        if with_derivative:
            dzeta = dzeta + coefficients[k - 1] * scale * (dpoch - log_big_n * poch)
        a, b = s + 2 * k - 1, s + 2 * k
        dpoch = dpoch * a * b + poch * (a + b)
        poch = poch * a * b
    return zeta, dzeta


def _evaluate(s, with_derivative: bool):
    s_arr = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s_arr == 1.0):
        raise PoleError("zeta has a pole at s = 1", residue=1.0, constant=EULER_GAMMA)
    flat = s_arr.ravel()
    zeta = np.empty_like(flat)
    dzeta = np.empty_like(flat)
    # sort by |s| so each block gets a head sum sized for its own heights
    order = np.argsort(np.abs(flat))
    for start in range(0, flat.size, _BLOCK):
        idx = order[start:start + _BLOCK]
        z, dz = _zeta_block(flat[idx], with_derivative)
        zeta[idx] = z
        if with_derivative:
            dzeta[idx] = dz
    zeta = zeta.reshape(s_arr.shape)
    dzeta = dzeta.reshape(s_arr.shape)
    if np.ndim(s) == 0:
        return complex(zeta[0]), complex(dzeta[0])
    return zeta, dzeta


def zeta(s):
    """
    Riemann zeta function.

    Args:
        s: Complex scalar or array, s != 1

    Returns:
        zeta(s) with the shape of `s`

    Raises:
        PoleError: At s = 1, carrying residue 1 and constant Euler's gamma
    """
    return _evaluate(s, with_derivative=False)[0]


def zeta_derivative(s):
    """zeta'(s) for complex scalar or array s != 1."""
    return _evaluate(s, with_derivative=True)[1]


def zeta_logderiv(s):
    """
    zeta'(s)/zeta(s).

    Raises:
        DomainError: If Re(s) <= 1/2
        PoleError: At s = 1
    """
    s_arr = np.asarray(s, dtype=complex)
    if np.any(s_arr.real <= 0.5):
        raise DomainError("zeta_logderiv requires Re(s) > 1/2")
    z, dz = _evaluate(s, with_derivative=True)
    return dz / z


def zeta_prime_over_zeta_at_2() -> float:
    """zeta'(2)/zeta(2), computed once per call site from the same kernel."""
    return float(np.real(zeta_logderiv(2.0)))
