"""
Fourier and Mellin transform engine

This module evaluates Fourier transforms of even functions and Mellin
transforms of functions on (0, inf) by adaptive quadrature (scipy.integrate.quad,
with its QAWO weights for oscillatory factors), and provides grid-backed
versions for transforms that are evaluated many times.

Conventions: f^(xi) = int f(x) e^{-2 pi i x xi} dx and Mf(s) = int_0^inf f(x) x^{s-1} dx.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline

from src.config import FOURIER_TOL
from src.errors import AccuracyError, DomainError

logger = logging.getLogger(__name__)

QUAD_LIMIT = 500
LINE_BLOCK = 512


@lru_cache(maxsize=32)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    return np.polynomial.legendre.leggauss(n)


def panel_nodes(a: float, b: float, width: float, order: int = 16) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights on [a, b].

    Panels have width at most `width`, which callers set to a half-period
    of the dominant oscillation.
    """
    if b <= a:
        return np.zeros(0), np.zeros(0)
    panels = max(1, int(math.ceil((b - a) / width)))
    edges = np.linspace(a, b, panels + 1)
    x, w = gauss_legendre(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


@dataclass
class TransformGrid:
    """Samples of a transform on increasing nodes, with an envelope beyond the last node."""
    nodes: np.ndarray
    values: np.ndarray
    decay_bound: Callable[[float], float]
    _spline: Optional[CubicSpline] = field(default=None, repr=False)

    def __post_init__(self):
        self.nodes = np.asarray(self.nodes, dtype=float)
        self.values = np.asarray(self.values)
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("TransformGrid nodes must be strictly increasing")
        self._spline = CubicSpline(self.nodes, self.values)

    @property
    def x_max(self) -> float:
        return float(self.nodes[-1])

    def __call__(self, x):
        x_arr = np.abs(np.asarray(x, dtype=float))
        inside = x_arr <= self.x_max
        result = np.where(inside, self._spline(np.minimum(x_arr, self.x_max)), 0.0)
        return float(result) if np.ndim(x) == 0 else result


def _truncation_point(envelope: Callable[[float], float], tol: float, start: float = 1.0) -> float:
    x = start
    for _ in range(200):
        if envelope(x) * max(x, 1.0) < tol:
            return x
        x *= 1.25
    raise AccuracyError("Envelope does not decay below tolerance", achieved=float(envelope(x)))


def fourier_at(
    f: Callable[[float], float],
    xi: float,
    envelope: Callable[[float], float],
    tol: float = FOURIER_TOL,
) -> float:
    """
    Fourier transform of an even integrable function at a real frequency.

    Args:
        f: Even function on the real line
        xi: Frequency
        envelope: Bound for |f(x)|, x >= 0, used to choose the truncation point
        tol: Absolute error target

    Returns:
        2 * int_0^{x_max} f(x) cos(2 pi x xi) dx

    Raises:
        AccuracyError: If quadrature cannot reach `tol`
    """
    x_max = _truncation_point(envelope, tol * 1e-2)
    omega = 2.0 * math.pi * abs(xi)
    if omega == 0.0:
        value, err = quad(f, 0.0, x_max, limit=QUAD_LIMIT, epsabs=tol * 1e-2, epsrel=1e-13)
    else:
        value, err = quad(
            f, 0.0, x_max, weight="cos", wvar=omega, limit=QUAD_LIMIT, epsabs=tol * 1e-2, epsrel=1e-13
        )
    if 2.0 * err > tol:
        raise AccuracyError(f"fourier_at reached {2 * err:.2e}, target {tol:.0e}", achieved=2 * err)
    return 2.0 * value


def fourier_cosine_grid(f: Callable[[np.ndarray], np.ndarray], support: float, xi: np.ndarray,
                        order: int = 0) -> np.ndarray:
    """
    Vectorized 2 * int_0^support f(y) cos(2 pi xi y) dy by Gauss-Legendre.

    `f` must be even and negligible beyond `support`. The node count is
    raised with the largest frequency.
    """
    xi = np.asarray(xi, dtype=float)
    if order <= 0:
        order = 256 + int(math.ceil(8.0 * support * float(np.max(np.abs(xi), initial=0.0))))
    x, w = gauss_legendre(order)
    y = 0.5 * support * (x + 1.0)
    wy = 0.5 * support * w * f(y)
    return 2.0 * np.cos(2.0 * math.pi * np.outer(xi, y)) @ wy


def _scan_edge(h: Callable[[float], float], direction: float, tol: float) -> float:
    u = 0.0
    quiet = 0
    for _ in range(400):
        u += direction
        if abs(h(u)) < tol:
            quiet += 1
            if quiet >= 2:
                return u
        else:
            quiet = 0
    return u


def mellin_at(
    f: Callable[[float], float],
    s: complex,
    strip: Tuple[float, float],
    value_at_zero: Optional[float] = None,
    continuation_order: int = 0,
    tol: float = FOURIER_TOL,
) -> complex:
    """
    Mellin transform int_0^inf f(x) x^{s-1} dx by quadrature in u = log x.

    Inside `strip` the integral is computed directly. When `value_at_zero`
    and `continuation_order` m are given, f - f(0) = O(x^m) at 0 and the
    transform is continued to -m < Re(s) < 0 by subtracting f(0) on (0, 1).

    Raises:
        DomainError: If Re(s) is outside the (continued) strip, or s = 0
        AccuracyError: If quadrature cannot reach `tol`
    """
    s = complex(s)
    lo, hi = strip
    continued = (
        value_at_zero is not None and continuation_order > 0
        and -continuation_order < s.real < 0.0 and lo == 0.0
    )
    if not (lo < s.real < hi or continued):
        raise DomainError(f"Re(s)={s.real} outside the Mellin strip ({lo}, {hi})")

    sigma, t = s.real, s.imag
    f0 = float(value_at_zero) if continued else 0.0

    def amplitude(u: float) -> float:
        x = math.exp(u)
        base = f(x) - (f0 if u < 0.0 else 0.0)
        return base * math.exp(sigma * u)

    u_lo = _scan_edge(amplitude, -1.0, tol * 1e-4)
    u_hi = _scan_edge(amplitude, 1.0, tol * 1e-4)

    value = 0j
    total_err = 0.0
    for a, b in ((u_lo, 0.0), (0.0, u_hi)):
        if t == 0.0:
            re, err = quad(amplitude, a, b, limit=QUAD_LIMIT, epsabs=tol * 1e-2, epsrel=1e-13)
            im, err_im = 0.0, 0.0
        else:
            re, err = quad(amplitude, a, b, weight="cos", wvar=t, limit=QUAD_LIMIT,
                           epsabs=tol * 1e-2, epsrel=1e-13)
            im, err_im = quad(amplitude, a, b, weight="sin", wvar=t, limit=QUAD_LIMIT,
                              epsabs=tol * 1e-2, epsrel=1e-13)
        value += complex(re, im)
        total_err += err + err_im
    if continued:
        value += f0 / s
    if total_err > tol:
        raise AccuracyError(f"mellin_at reached {total_err:.2e}, target {tol:.0e}", achieved=total_err)
    return value


def mellin_on_line(samples: Callable[[np.ndarray], np.ndarray], z: np.ndarray,
                   u_range: Tuple[float, float] = (-30.0, 5.0), step: float = 0.005) -> np.ndarray:
    """
    Mellin transform at many points z by the trapezoid rule in u = log x.

    `samples(x)` is evaluated once on the u-grid; the integrand must be
    negligible at both ends of `u_range` for every z. The kernel is formed
    in blocks of LINE_BLOCK points of z.
    """
    u = np.arange(u_range[0], u_range[1] + step, step)
    f_u = samples(np.exp(u))
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    weights = np.full(u.size, step)
    weights[0] = weights[-1] = 0.5 * step
    weighted = f_u * weights
    out = np.empty(flat.size, dtype=complex)
    for start in range(0, flat.size, LINE_BLOCK):
        block = flat[start:start + LINE_BLOCK]
        out[start:start + LINE_BLOCK] = np.exp(np.outer(block, u)) @ weighted
    return out.reshape(z.shape)
