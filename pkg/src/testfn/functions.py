"""
Test functions

Even test functions phi whose Fourier transforms have compact support
[-sigma, sigma]: the Fejer kernel (closed-form entire extension, slow x^-2
decay) and the squared bump transform "bump2" (Schwartz, numeric).
"""
import logging
import math
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Callable

import numpy as np
from scipy.integrate import quad

from src.config import PHI_STRIP_HALF_WIDTH
from src.errors import ConfigError, DomainError
from src.special import gauss_legendre, panel_nodes

logger = logging.getLogger(__name__)

TESTFN_KINDS = ("fejer", "bump2")


class TestFunction(ABC):
    """
    Even test function phi with compactly supported phi^.

    Args:
        sigma: Support radius of phi^
        amplitude: Constant multiplying phi and phi^
    """
    __test__ = False
    kind: str = ""
    smoothness: str = ""

    def __init__(self, sigma: float, amplitude: float = 1.0):
        if not sigma > 0:
            raise ConfigError(f"sigma must be positive, got {sigma}")
        self.sigma = float(sigma)
        self.amplitude = float(amplitude)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(sigma={self.sigma}, amplitude={self.amplitude})"

    @property
    def spec(self) -> str:
        return f"{self.kind}:{self.sigma:g}"

    def scaled(self, factor: float) -> "TestFunction":
        return type(self)(self.sigma, self.amplitude * factor)

    @abstractmethod
    def phi(self, x):
        """phi on the real line."""

    @abstractmethod
    def phi_hat(self, u):
        """phi^ on the real line, zero for |u| >= sigma."""

    @abstractmethod
    def phi_complex(self, z):
        """Entire extension of phi."""

    @abstractmethod
    def envelope(self, x):
        """Nonincreasing bound for |phi| on [x, inf)."""

    @abstractmethod
    def envelope_integral(self, start: float) -> float:
        """int_start^inf envelope(x) dx."""

    @abstractmethod
    def integral_phi_hat(self, a: float, b: float) -> float:
        """int_a^b phi^(u) du."""

    @abstractmethod
    def tail_integral(self, h: Callable, start: float, shift: float = 0.0) -> complex:
        """int_start^inf h(u) phi(u - i shift) du for a smooth, slowly varying h."""

    @property
    def phi_hat0(self) -> float:
        return float(self.phi_hat(0.0))

    @property
    def phi0(self) -> float:
        return float(np.real(self.phi(0.0)))

    def support_end(self, tol: float, shift: float = 0.0) -> float:
        """First u with envelope(u) * exp(2 pi sigma shift) below `tol`."""
        growth = math.exp(2.0 * math.pi * self.sigma * abs(shift))
        u = 1.0
        while self.envelope(u) * growth >= tol:
            u *= 1.1
            if u > 1e9:
                break
        return u


class FejerTestFunction(TestFunction):
    """phi^(u) = max(0, 1 - |u|/sigma), phi(x) = sin^2(pi sigma x)/(sigma pi^2 x^2)."""
    kind = "fejer"
    smoothness = "entire-closed-form"

    def phi(self, x):
        x = np.asarray(x, dtype=float)
        return self.amplitude * self.sigma * np.sinc(self.sigma * x) ** 2

    def phi_hat(self, u):
        u = np.asarray(u, dtype=float)
        return self.amplitude * np.maximum(0.0, 1.0 - np.abs(u) / self.sigma)

    def phi_complex(self, z):
        z = np.asarray(z, dtype=complex)
        return self.amplitude * self.sigma * np.sinc(self.sigma * z) ** 2

    def envelope(self, x):
        x = np.maximum(np.abs(np.asarray(x, dtype=float)), 1e-300)
        return self.amplitude * np.minimum(self.sigma, 1.0 / (self.sigma * math.pi ** 2 * x ** 2))

    def envelope_integral(self, start: float) -> float:
        start = max(start, 1.0 / (self.sigma * math.pi))
        return self.amplitude / (self.sigma * math.pi ** 2 * start)

    def _antiderivative(self, u: float) -> float:
        v = min(abs(u), self.sigma)
        return math.copysign(v - v * v / (2.0 * self.sigma), u)

    def integral_phi_hat(self, a: float, b: float) -> float:
        return self.amplitude * (self._antiderivative(b) - self._antiderivative(a))

    def tail_integral(self, h: Callable, start: float, shift: float = 0.0) -> complex:
        # phi(w) = (1 - cos(2 pi sigma w)) / (2 sigma pi^2 w^2) with w = u - i*shift
        if start <= 0:
            raise DomainError("tail_integral needs a positive starting point")
        omega = 2.0 * math.pi * self.sigma
        norm = 2.0 * self.sigma * math.pi ** 2

        def q(u):
            return complex(h(u)) / (norm * (u - 1j * shift) ** 2)

        def part(fn, weight=None):
            kwargs = dict(limlst=200) if weight else dict(limit=500)
            if weight:
                kwargs.update(weight=weight, wvar=omega)
            re = quad(lambda u: fn(u).real, start, np.inf, **kwargs)[0]
            im = quad(lambda u: fn(u).imag, start, np.inf, **kwargs)[0]
            return complex(re, im)

        plain = part(q)
        cos_part = part(q, "cos")
        sin_part = part(q, "sin")
        value = plain - math.cosh(omega * shift) * cos_part - 1j * math.sinh(omega * shift) * sin_part
        return self.amplitude * value


class Bump2TestFunction(TestFunction):
    """
    phi^ = c (beta * beta) with beta(u) = exp(-1/(1 - (2u/sigma)^2)) on |u| < sigma/2.

    phi = c B(x)^2 with B = beta^ real and even; c makes phi^(0) = 1.
    """
    kind = "bump2"
    smoothness = "numeric"

    QUAD_ORDER = 256
    ENVELOPE_X_MAX = 200.0

    @property
    def half(self) -> float:
        return 0.5 * self.sigma

    def beta(self, u):
        u = np.asarray(u, dtype=float)
        inside = np.abs(u) < self.half
        t = np.where(inside, u / self.half, 0.0)
        return np.where(inside, np.exp(-1.0 / (1.0 - t * t)), 0.0)

    @cached_property
    def normalization(self) -> float:
        x, w = gauss_legendre(self.QUAD_ORDER)
        u = self.half * x
        return 1.0 / float(self.half * np.sum(w * self.beta(u) ** 2))

    def beta_hat(self, z):
        """B(z) = 2 int_0^{sigma/2} beta(u) cos(2 pi u z) du, entire in z."""
        z = np.asarray(z, dtype=complex)
        order = self.QUAD_ORDER + int(math.ceil(8.0 * self.half * float(np.max(np.abs(z.real), initial=0.0))))
        x, w = gauss_legendre(order)
        u = 0.5 * self.half * (x + 1.0)
        weights = 0.5 * self.half * w * self.beta(u)
        values = 2.0 * np.cos(2.0 * math.pi * np.outer(z.ravel(), u)) @ weights
        return values.reshape(z.shape)

    def phi(self, x):
        x = np.asarray(x, dtype=float)
        return self.amplitude * self.normalization * np.real(self.beta_hat(x)) ** 2

    def phi_complex(self, z):
        return self.amplitude * self.normalization * self.beta_hat(z) ** 2

    def phi_hat(self, u):
        u_arr = np.abs(np.atleast_1d(np.asarray(u, dtype=float)))
        x, w = gauss_legendre(self.QUAD_ORDER)
        lo = np.maximum(-self.half, u_arr - self.half)
        hi = np.minimum(self.half, u_arr + self.half)
        mid = 0.5 * (hi + lo)
        rad = np.maximum(0.5 * (hi - lo), 0.0)
        v = mid[:, None] + rad[:, None] * x[None, :]
        conv = rad * np.sum(w[None, :] * self.beta(v) * self.beta(u_arr[:, None] - v), axis=1)
        value = np.where(u_arr < self.sigma, self.amplitude * self.normalization * conv, 0.0)
        return float(value[0]) if np.ndim(u) == 0 else value

    @cached_property
    def _envelope_table(self):
        grid = np.linspace(0.0, self.ENVELOPE_X_MAX, 4001)
        values = np.abs(self.phi(grid))
        suffix = np.maximum.accumulate(values[::-1])[::-1]
        return grid, suffix

    def envelope(self, x):
        grid, suffix = self._envelope_table
        x = np.abs(np.asarray(x, dtype=float))
        idx = np.clip(np.searchsorted(grid, x, side="right") - 1, 0, grid.size - 1)
        return suffix[idx]

    def envelope_integral(self, start: float) -> float:
        grid, suffix = self._envelope_table
        step = grid[1] - grid[0]
        return float(np.sum(suffix[grid >= start]) * step)

    def integral_phi_hat(self, a: float, b: float) -> float:
        lo, hi = max(a, -self.sigma), min(b, self.sigma)
        if hi <= lo:
            return 0.0
        points = [p for p in (-self.half, 0.0, self.half) if lo < p < hi]
        value, _ = quad(lambda u: self.phi_hat(u), lo, hi, points=points or None, limit=200,
                        epsabs=1e-13, epsrel=1e-12)
        return value

    def tail_integral(self, h: Callable, start: float, shift: float = 0.0) -> complex:
        end = self.support_end(1e-16, shift)
        if start >= end:
            return 0j
        nodes, weights = panel_nodes(start, end, width=0.25 / self.sigma)
        h_vals = np.array([complex(h(u)) for u in nodes])
        return complex(np.sum(weights * h_vals * self.phi_complex(nodes - 1j * shift)))


def make_testfn(kind: str, sigma: float) -> TestFunction:
    """
    Build a test function.

    Raises:
        ConfigError: For unknown kinds or nonpositive sigma
    """
    if kind == "fejer":
        return FejerTestFunction(sigma)
    if kind == "bump2":
        return Bump2TestFunction(sigma)
    raise ConfigError(f"Unknown test function kind {kind!r}; available: {', '.join(TESTFN_KINDS)}")


def parse_testfn(spec: str) -> TestFunction:
    """Parse a CLI string like `fejer:1.5` or `bump2:0.8`."""
    kind, sep, sigma = spec.partition(":")
    if not sep:
        raise ConfigError(f"Test function spec must be kind:sigma, got {spec!r}")
    try:
        return make_testfn(kind.strip(), float(sigma))
    except ValueError:
        raise ConfigError(f"Malformed sigma in {spec!r}")


def eval_phi_complex(phi: TestFunction, z):
    """
    Entire extension of phi at complex z inside the configured strip.

    Raises:
        DomainError: If |Im z| exceeds the strip half-width
    """
    z_arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(z_arr.imag) > PHI_STRIP_HALF_WIDTH):
        raise DomainError(f"|Im z| exceeds the strip half-width {PHI_STRIP_HALF_WIDTH}")
    value = phi.phi_complex(z_arr)
    return complex(value) if np.ndim(z) == 0 else value
