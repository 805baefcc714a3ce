"""
L-function evaluator

This module evaluates L(s, chi_{8d}) by the smoothed approximate
functional equation with incomplete-gamma weights. With q = 8|d|, a the
parity and z = (s+a)/2, z' = (1-s+a)/2,

    (q/pi)^{a/2} Lambda(s) = sum_n chi(n) n^a [ (pi n^2/q)^{-z} Gamma(z, pi n^2 delta/q)
                                              + (pi n^2/q)^{-z'} Gamma(z', pi n^2 conj(delta)/q) ]

for any unit delta with |arg delta| < pi/2 (root number 1). Rotating
delta towards the imaginary axis as |Im s| grows keeps the terms of the
size of Lambda itself. All incomplete gammas of one sum share z and the
ray, so they are tails of a single integral along that ray, computed
once by composite Gauss-Legendre quadrature in log y and read off at
the points pi n^2/q.
"""
import logging
import math
from typing import NamedTuple

import numpy as np
from scipy.special import loggamma

from src.config import D_MAX, T_MAX
from src.errors import AccuracyError, DomainError
from src.models import QuadraticCharacter
from src.special import gauss_legendre

logger = logging.getLogger(__name__)

EVAL_TOL = 1e-10
IMAG_TOL = 1e-8
RAY_MARGIN = 8.0
TAIL_EXPONENT = 40.0
PANEL_ORDER = 8
_EPS = np.finfo(float).eps


class LValue(NamedTuple):
    value: complex
    bound: float


def ray_angle(im_z: float, margin: float = RAY_MARGIN) -> float:
    """Angle of delta: 0 for small |Im z|, approaching +-pi/2 as |Im z| grows."""
    gap = min(0.5 * math.pi, margin / (2.0 * abs(im_z) + 1.0))
    return math.copysign(0.5 * math.pi - gap, im_z)


def _panel_edges(v_start: float, v_end: float, im_z: float, re_z: float, breaks: np.ndarray) -> np.ndarray:
    # one panel per radian of phase or e-fold of amplitude of exp(-delta e^v + z v)
    edges = [v_start]
    v = v_start
    while v < v_end:
        v += 1.0 / (abs(im_z) + abs(re_z) + math.exp(v) + 1.0)
        edges.append(min(v, v_end))
    return np.union1d(np.asarray(edges), breaks)


def ray_tails(z: complex, theta: float, x: np.ndarray):
    """
    Gamma(z, delta x_n) = delta^z int_{x_n}^inf e^{-delta y} y^{z-1} dy for increasing x_n > 0.

    Returns:
        (values at x, the same tails with every panel contribution replaced by its modulus)
    """
    delta = complex(math.cos(theta), math.sin(theta))
    y_end = (TAIL_EXPONENT + 10.0 * max(abs(z.real), 1.0)) / math.cos(theta)
    log_x = np.log(x)
    edges = _panel_edges(float(log_x[0]), max(math.log(y_end), float(log_x[-1])), z.imag, z.real, log_x)
    nodes, weights = gauss_legendre(PANEL_ORDER)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    v = mid[:, None] + half[:, None] * nodes[None, :]
    integrand = np.exp(-delta * np.exp(v) + z * v)
    panels = half * (integrand @ weights)
    tails = np.concatenate([np.cumsum(panels[::-1])[::-1], [0.0]])
    sizes = np.concatenate([np.cumsum(np.abs(panels)[::-1])[::-1], [0.0]])
    index = np.searchsorted(edges, log_x)
    scale = np.exp(1j * theta * z)
    return scale * tails[index], abs(scale) * sizes[index]


def _theta_sum(chi: np.ndarray, n: np.ndarray, q: int, a: int, z: complex, theta: float):
    """One incomplete-gamma sum and the sum of the moduli of its terms."""
    x = math.pi * n.astype(float) ** 2 / q
    tails, sizes = ray_tails(z, theta, x)
    coefficients = chi * n.astype(float) ** a * np.exp(-z * np.log(x))
    return complex(np.sum(coefficients * tails)), float(np.sum(np.abs(coefficients) * sizes))


def _check_range(char: QuadraticCharacter, t: float) -> None:
    if abs(t) > T_MAX:
        raise DomainError(f"|t|={abs(t)} exceeds T_MAX={T_MAX}")
    if abs(char.d) > D_MAX:
        raise DomainError(f"|d|={abs(char.d)} exceeds D_MAX={D_MAX}")


def eval_L_at(char: QuadraticCharacter, s: complex, margin: float = RAY_MARGIN) -> LValue:
    """
    L(s, chi_{8d}) anywhere in the plane, with a bound on the absolute error.

    Args:
        char: Character chi_{8d}
        s: Point of evaluation
        margin: Sets how close the ray runs to the imaginary axis; smaller
            margins give shorter sums and less cancellation headroom

    Raises:
        AccuracyError: If the error bound exceeds EVAL_TOL
    """
    s = complex(s)
    q, a = char.conductor, char.a
    z = (s + a) / 2.0
    z_dual = (1.0 - s + a) / 2.0
    theta = ray_angle(z.imag, margin)
    y_end = (TAIL_EXPONENT + 10.0 * max(abs(z.real), abs(z_dual.real), 1.0)) / math.cos(theta)
    n_max = max(1, int(math.sqrt(q * y_end / math.pi)) + 1)
    n = np.arange(1, n_max + 1)
    chi = char.values(n_max).astype(float)

    first, size_first = _theta_sum(chi, n, q, a, z, theta)
    second, size_second = _theta_sum(chi, n, q, a, z_dual, -theta)
    log_norm = (z * math.log(q / math.pi) + loggamma(z))
    norm = np.exp(log_norm)
    value = (first + second) / norm
    roundoff = 16.0 * _EPS * (size_first + size_second) / abs(norm)
    truncation = math.exp(-TAIL_EXPONENT) * (size_first + size_second) / abs(norm)
    bound = roundoff + truncation
    if bound > EVAL_TOL:
        raise AccuracyError(f"L({s}) for d={char.d}: error bound {bound:.1e} exceeds {EVAL_TOL:.0e}",
                            achieved=bound)
    return LValue(complex(value), bound)


def eval_L(char: QuadraticCharacter, t: float, margin: float = RAY_MARGIN) -> complex:
    """
    L(1/2 + it, chi_{8d}).

    Raises:
        DomainError: If |t| > T_MAX or |d| > D_MAX
        AccuracyError: If the error bound exceeds EVAL_TOL
    """
    _check_range(char, t)
    return eval_L_at(char, complex(0.5, t), margin).value


def hardy_theta(char: QuadraticCharacter, t):
    """theta_d(t) = Im log Gamma((1/2 + it + a)/2) + (t/2) log(8|d|/pi)."""
    t_arr = np.asarray(t, dtype=float)
    value = np.imag(loggamma((0.5 + char.a + 1j * t_arr) / 2.0)) + 0.5 * t_arr * math.log(char.conductor / math.pi)
    return float(value) if np.ndim(t) == 0 else value


def hardy_Z(char: QuadraticCharacter, t: float, margin: float = RAY_MARGIN) -> float:
    """
    e^{i theta_d(t)} L(1/2 + it, chi_{8d}), real because the root number is 1.

    Raises:
        AccuracyError: If the rotated value has |Im| >= IMAG_TOL
    """
    value = np.exp(1j * hardy_theta(char, t)) * eval_L(char, t, margin)
    if abs(value.imag) >= IMAG_TOL:
        raise AccuracyError(f"Z({t}) for d={char.d} has imaginary part {value.imag:.1e}",
                            achieved=abs(value.imag))
    return float(value.real)
