"""
Transition term J(X)

J(X) carries the phase transition at sigma = 1. It is computed from its
Mellin representation: for each branch an inner tau-integral of phi^
against an exponential is combined with a vertical-line integral of
zeta quotients and the Mellin transforms of g and g^,

    J = 3 zeta(2)/(L w^(0)) (1/2 pi) [ int_{Re z = 3/2} K1(z) Mg^(z) I1(z) dy
                                      + int_{Re z = -5/4} K2(z) Mg(-z) I2(z) dy ]

with I1(z) = int_0^inf phi^(1 + tau/L) e^{-(z-1) tau/2} dtau and
I2(z) = int_0^inf phi^(1 - tau/L) e^{z tau/2} dtau. The h2 kernel is
also available as a direct Moebius sum and as a Mellin integral on
either of two lines, which the verification compares pointwise.
"""
import logging
import math
from typing import Callable, List, NamedTuple

import numpy as np
from scipy.integrate import quad
from scipy.special import loggamma

from src.arith import mobius_table
from src.errors import AccuracyError
from src.models import FamilyParams
from src.special import (
    EULER_GAMMA,
    mellin_at,
    mellin_on_line,
    panel_nodes,
    zeta,
    zeta_prime_over_zeta_at_2,
)
from src.testfn import TestFunction, WeightFunction
from src.testfn.weights import G_HAT_X_MAX, G_RATE

logger = logging.getLogger(__name__)

LINE_Y_MAX = 120.0
RIGHT_ABSCISSA = 1.5
LEFT_ABSCISSA = -1.25
Y_BLOCK = 512
MELLIN_CHECK_TOL = 1e-8
H2_DIRECT_FACTOR = 1.4e4


class JValue(NamedTuple):
    value: float
    budget: float


def j_bracket(w: WeightFunction) -> float:
    """-log(2^{7/3} e^{1+gamma}) + 2 zeta'(2)/zeta(2) - Mw'(1)/Mw(1)."""
    return (-(7.0 / 3.0) * math.log(2.0) - 1.0 - EULER_GAMMA
            + 2.0 * zeta_prime_over_zeta_at_2() - w.mellin_logderiv_at_1)


def j_asymptotic(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    """Leading behaviour (phi^(1)/L) j_bracket(w) of J(X)."""
    return float(phi.phi_hat(1.0)) / fam.L * j_bracket(w)


def _k1(z):
    return (2.0 ** -z - 1.0) * zeta(z) / ((1.0 - 2.0 ** (-1.0 - z)) * zeta(1.0 + z))


def _k2(z):
    return (2.0 ** (-z - 1.0) - 1.0) * zeta(-z) / ((1.0 - 2.0 ** (-2.0 - z)) * zeta(2.0 + z))


def _h2_factor(z):
    return (2.0 ** (-z - 1.0) - 1.0) / ((1.0 - 2.0 ** (-2.0 - z)) * zeta(2.0 + z))


def reflected_mellin_g_hat(w: WeightFunction, z):
    """Mg^(z) = -2 sin(pi (z-1)/2) Gamma(z) (2 pi)^{-z} Mg(1 - z)."""
    z = np.asarray(z, dtype=complex)
    return (-2.0 * np.sin(0.5 * math.pi * (z - 1.0)) * np.exp(loggamma(z) - z * math.log(2.0 * math.pi))
            * w.mellin_g(1.0 - z))


def _segments(edges: List[float]) -> List[float]:
    return sorted(set(e for e in edges if e >= 0.0))


def _tau_nodes(breaks: List[float], width: float):
    nodes, weights = [], []
    for a, b in zip(breaks[:-1], breaks[1:]):
        n, wt = panel_nodes(a, b, width, order=8)
        nodes.append(n)
        weights.append(wt)
    if not nodes:
        return np.zeros(0), np.zeros(0)
    return np.concatenate(nodes), np.concatenate(weights)


def _inner_integrals(z: np.ndarray, tau: np.ndarray, weights: np.ndarray, values: np.ndarray,
                     exponent: Callable) -> np.ndarray:
    """sum_k weights_k values_k exp(z-dependent exponent * tau_k), formed in blocks of z."""
    out = np.empty(z.size, dtype=complex)
    if tau.size == 0:
        out[:] = 0.0
        return out
    weighted = weights * values
    for start in range(0, z.size, Y_BLOCK):
        block = z[start:start + Y_BLOCK]
        out[start:start + Y_BLOCK] = np.exp(np.outer(exponent(block), tau)) @ weighted
    return out


def _y_nodes(tau_extent: float):
    # half-period of the phase e^{-i y tau/2} at the largest tau
    width = min(0.5, 2.0 * math.pi / max(tau_extent, 1.0))
    return panel_nodes(0.0, LINE_Y_MAX, width, order=8)


def sampled_mellin_g_hat(w: WeightFunction, z) -> np.ndarray:
    """Mg^ integrated from the sampled g^ grid, with no consistency check."""
    return mellin_on_line(w.g_hat, np.asarray(z, dtype=complex), u_range=(-30.0, math.log(G_HAT_X_MAX)), step=0.005)


def mellin_g_hat_on_line(w: WeightFunction, z: np.ndarray) -> np.ndarray:
    """
    Mg^ on a vertical line from the sampled g^ grid.

    Raises:
        AccuracyError: If the grid-backed transform disagrees with its
            reflected closed form by more than MELLIN_CHECK_TOL
    """
    z = np.asarray(z, dtype=complex)
    values = sampled_mellin_g_hat(w, z)
    picks = np.linspace(0, z.size - 1, min(z.size, 5)).astype(int)
    gap = float(np.max(np.abs(values[picks] - reflected_mellin_g_hat(w, z[picks]))))
    if gap > MELLIN_CHECK_TOL:
        raise AccuracyError(f"sampled g^ gives Mellin transforms off by {gap:.2e}", achieved=gap)
    return values


def j_exact_with_budget(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> JValue:
    """
    J(X) from its Mellin representation.

    The vertical lines are truncated at |Im z| = LINE_Y_MAX, where the
    Mellin factors have decayed like e^{-pi |y| / 8}; the reported budget
    is the size of the integrand at the cut times that decay length.
    """
    L, sigma = fam.L, phi.sigma
    prefactor = 3.0 * zeta(2.0).real / (L * w.w_hat0)

    # right branch: phi^(1 + tau/L), nonzero for tau < (sigma - 1) L
    right_end = max(0.0, (sigma - 1.0) * L)
    tau1, wt1 = _tau_nodes(_segments([0.0, right_end]), width=math.pi / LINE_Y_MAX)
    # left branch: phi^(1 - tau/L), nonzero for (1 - sigma) L < tau < (1 + sigma) L
    left_breaks = [0.0, (1.0 - sigma) * L, L, (1.0 + sigma) * L] if sigma < 1.0 else [0.0, L, (1.0 + sigma) * L]
    tau2, wt2 = _tau_nodes(_segments(left_breaks), width=math.pi / LINE_Y_MAX)

    phi1 = phi.phi_hat(1.0 + tau1 / L) if tau1.size else np.zeros(0)
    phi2 = phi.phi_hat(1.0 - tau2 / L)

    y, wy = _y_nodes(max(right_end, (1.0 + sigma) * L))
    z1 = RIGHT_ABSCISSA + 1j * y
    z2 = LEFT_ABSCISSA + 1j * y

    integrand = np.zeros(y.size, dtype=complex)
    if tau1.size:
        i1 = _inner_integrals(z1, tau1, wt1, phi1, lambda z: -(z - 1.0) / 2.0)
        integrand += _k1(z1) * mellin_g_hat_on_line(w, z1) * i1
    i2 = _inner_integrals(z2, tau2, wt2, phi2, lambda z: z / 2.0)
    integrand += _k2(z2) * w.mellin_g(-z2) * i2

    # conjugate symmetry in y: (1/2 pi) int_{-Y}^{Y} = (1/pi) Re int_0^Y
    value = prefactor / math.pi * float(np.sum(wy * integrand).real)
    edge = float(np.max(np.abs(integrand[-8:])))
    budget = prefactor / math.pi * edge * 8.0 / math.pi
    logger.info(f"j_exact {phi.spec} X={fam.X:.3g}: {value:.12f} ({y.size} line nodes, "
                f"{tau1.size + tau2.size} tau nodes)")
    return JValue(value, budget)


def j_exact(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    return j_exact_with_budget(phi, w, fam).value


def h2_direct(x: float, w: WeightFunction) -> float:
    """
    h2(x) = 3 zeta(2)/w^(0) sum_{s odd} mu(s)/s^2 (g(x/2s)/2 - g(x/s)).

    Beyond S = H2_DIRECT_FACTOR max(x, 1) every g(x/s) equals g(0) to
    double precision, so the remaining odd s contribute -g(0)/2 times the
    tail of sum mu(s)/s^2 = 4/(3 zeta(2)).
    """
    S = int(H2_DIRECT_FACTOR * max(x, 1.0))
    mu = mobius_table(S)
    s = np.arange(1, S + 1, 2)
    coeff = mu[s].astype(float) / s.astype(float) ** 2
    head = math.fsum(coeff * (0.5 * w.g(x / (2.0 * s)) - w.g(x / s)))
    zeta2 = zeta(2.0).real
    tail = -0.5 * float(w.g(0.0)) * (4.0 / (3.0 * zeta2) - math.fsum(coeff))
    return 3.0 * zeta2 / w.w_hat0 * (head + tail)


def h2_mellin(x: float, w: WeightFunction, abscissa: float = LEFT_ABSCISSA, y_max: float = 240.0) -> float:
    """h2(x) as the inverse Mellin integral on Re z = abscissa (-1/2 or -5/4)."""
    y, wy = panel_nodes(0.0, y_max, 0.5, order=16)
    z = abscissa + 1j * y
    integrand = _h2_factor(z) * w.mellin_g(-z) * np.exp(z * math.log(x))
    return 3.0 * zeta(2.0).real / w.w_hat0 / math.pi * float(np.sum(wy * integrand).real)


def reflection_sides(w: WeightFunction, z: float):
    """
    Both sides of zeta(z+1) Mg^(z+1) = zeta(-z) Mg(-z) for 0 < z < 1.

    Mg^ is integrated from the sampled g^; Mg at -z is continued past 0
    by subtracting g(0), which is valid because g - g(0) = O(x^4).
    """
    left = zeta(z + 1.0) * mellin_at(w.g_hat, z + 1.0, strip=(0.0, math.inf))
    right = zeta(-z) * mellin_at(lambda x: float(w.g(x)), -z, strip=(0.0, math.inf),
                                 value_at_zero=float(w.g(0.0)), continuation_order=4)
    return complex(left), complex(right)


def glog_sides(w: WeightFunction):
    """
    Both sides of int_0^inf log x g'(x) dx = (w^(0)/2) log(2^3 pi^2 e^{1+gamma}) + int_0^inf w(x) log x dx.

    Both integrals are computed by quadrature; neither uses the closed Mellin forms.
    """
    def g_prime_log(x):
        return -4.0 * G_RATE * x ** 3 * float(w.g(x)) * math.log(x)

    left, _ = quad(g_prime_log, 0.0, 2.0 * w.g_support, limit=200, epsabs=1e-14, epsrel=1e-13)
    head, _ = quad(lambda x: float(w.w(x)) * math.log(x), 0.0, 1.0, limit=200, epsabs=1e-14, epsrel=1e-13)
    rest, _ = quad(lambda x: float(w.w(x)) * math.log(x), 1.0, np.inf, limit=200, epsabs=1e-14, epsrel=1e-13)
    right = 0.5 * w.w_hat0 * math.log(8.0 * math.pi ** 2 * math.exp(1.0 + EULER_GAMMA)) + head + rest
    return left, right
