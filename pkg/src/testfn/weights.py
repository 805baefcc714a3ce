"""
Weight functions

The averaging weight w of the family, with its Fourier and Mellin
transforms and the derived kernels g(y) = w^(4 pi e y^2) and g^.
"""
import logging
import math
from functools import cached_property

import numpy as np
from scipy.special import loggamma

from src.config import WEIGHT_CUTOFF
from src.errors import ConfigError
from src.special import TransformGrid, digamma, fourier_cosine_grid

logger = logging.getLogger(__name__)

WEIGHT_KINDS = ("gaussian",)

# g(y) = w^(4 pi e y^2) = exp(-G_RATE y^4) for the Gaussian
G_RATE = 16.0 * math.pi ** 3 * math.e ** 2

G_HAT_STEP = 0.005
G_HAT_X_MAX = 40.0


class WeightFunction:
    """
    Gaussian family weight w(x) = c * exp(-pi x^2), with c > 0.

    All transforms are exact closed forms except g^, which is sampled on a
    TransformGrid and interpolated.
    """

    def __init__(self, kind: str = "gaussian", scale: float = 1.0):
        if kind not in WEIGHT_KINDS:
            raise ConfigError(f"Unknown weight kind {kind!r}; available: {', '.join(WEIGHT_KINDS)}")
        if not scale > 0:
            raise ConfigError(f"Weight scale must be positive, got {scale}")
        self.kind = kind
        self.scale = float(scale)

    def __repr__(self) -> str:
        return f"WeightFunction(kind={self.kind!r}, scale={self.scale})"

    @property
    def spec(self) -> str:
        return self.kind if self.scale == 1.0 else f"{self.kind}:{self.scale:g}"

    def w(self, x):
        return self.scale * np.exp(-math.pi * np.square(x))

    def w_hat(self, xi):
        return self.scale * np.exp(-math.pi * np.square(xi))

    @property
    def w_hat0(self) -> float:
        return self.scale

    def mellin(self, s):
        """Mw(s) = (c/2) pi^{-s/2} Gamma(s/2)."""
        s = np.asarray(s, dtype=complex)
        value = 0.5 * self.scale * np.exp(-0.5 * s * math.log(math.pi) + loggamma(0.5 * s))
        return complex(value) if value.ndim == 0 else value

    @cached_property
    def mellin_logderiv_at_1(self) -> float:
        """Mw'(1)/Mw(1) = (psi(1/2) - log pi)/2."""
        return 0.5 * (digamma(0.5).real - math.log(math.pi))

    @property
    def log_moment(self) -> float:
        """int_0^inf w(x) log x dx = Mw'(1)."""
        return 0.5 * self.w_hat0 * self.mellin_logderiv_at_1

    def g(self, y):
        return self.scale * np.exp(-G_RATE * np.power(np.asarray(y, dtype=float), 4))

    def mellin_g(self, s):
        """Mg(s) = (c/4) a^{-s/4} Gamma(s/4) with a = 16 pi^3 e^2."""
        s = np.asarray(s, dtype=complex)
        value = 0.25 * self.scale * np.exp(-0.25 * s * math.log(G_RATE) + loggamma(0.25 * s))
        return complex(value) if value.ndim == 0 else value

    @property
    def g_support(self) -> float:
        """Point beyond which g < 1e-24 * c."""
        return (55.0 / G_RATE) ** 0.25

    @cached_property
    def g_hat(self) -> TransformGrid:
        nodes = np.arange(0.0, G_HAT_X_MAX + G_HAT_STEP / 2, G_HAT_STEP)
        values = fourier_cosine_grid(self.g, self.g_support, nodes)
        tail = float(np.max(np.abs(values[-200:])))
        logger.info(f"Sampled g^ on {nodes.size} nodes; tail magnitude {tail:.1e}")
        return TransformGrid(nodes=nodes, values=values,
                             decay_bound=lambda x: max(tail, 1e-300) * (G_HAT_X_MAX / max(x, G_HAT_X_MAX)) ** 2)

    def d_cutoff(self, X: float) -> int:
        """Largest |d| with w(d/X) >= WEIGHT_CUTOFF * c."""
        return max(1, int(math.floor(X * math.sqrt(math.log(1.0 / WEIGHT_CUTOFF) / math.pi))))


def make_weight(spec: str = "gaussian") -> WeightFunction:
    """
    Build a weight from a CLI string `kind` or `kind:scale`.

    Raises:
        ConfigError: For unknown kinds or malformed scales
    """
    kind, _, scale = spec.partition(":")
    try:
        return WeightFunction(kind.strip(), float(scale) if scale else 1.0)
    except ValueError as e:
        raise ConfigError(f"Malformed weight spec {spec!r}: {e}")
