"""
Gamma-function helpers

Digamma and Gamma ratios on complex arguments, built on scipy.special's
complex loggamma and psi.
"""
import logging

import numpy as np
from scipy.special import loggamma, psi

from src.errors import DomainError

logger = logging.getLogger(__name__)


def _at_poles(z: np.ndarray) -> np.ndarray:
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def digamma(s):
    """
    Digamma function psi(s) = Gamma'(s)/Gamma(s).

    Raises:
        DomainError: If s is a nonpositive integer
    """
    z = np.asarray(s, dtype=complex)
    if np.any(_at_poles(z)):
        raise DomainError("digamma has poles at the nonpositive integers")
    value = psi(z)
    return complex(value) if np.ndim(s) == 0 else value


def gamma_ratio(a, b):
    """
    Gamma(a)/Gamma(b) via a log-Gamma difference.

    A pole of Gamma(b) gives exactly 0; a pole of Gamma(a) gives complex
    infinity and is logged.
    """
    za = np.asarray(a, dtype=complex)
    zb = np.asarray(b, dtype=complex)
    za, zb = np.broadcast_arrays(za, zb)
    pole_a = _at_poles(za)
    pole_b = _at_poles(zb)
    safe_a = np.where(pole_a | pole_b, 0.5, za)
    safe_b = np.where(pole_a | pole_b, 0.5, zb)
    value = np.exp(loggamma(safe_a) - loggamma(safe_b))
    value = np.where(pole_b, 0.0, value)
    if np.any(pole_a & ~pole_b):
        logger.warning("gamma_ratio evaluated at a pole of the numerator; returning infinity")
        value = np.where(pole_a & ~pole_b, complex(np.inf), value)
    if np.ndim(a) == 0 and np.ndim(b) == 0:
        return complex(value)
    return value
