"""
Closed-form terms of the explicit expansion

This module evaluates the terms of the expansion that need no contour
integration: the main term, the weight-log term, the digamma integral,
the prime-power sum, and the Katz-Sarnak limit, together with the closed
forms the prediction's log-conductor and digamma terms reduce to.
"""
import logging
import math
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad

from src.arith import chebyshev_theta, prime_blocks
from src.config import SIEVE_MAX
from src.errors import ResourceError
from src.models import FamilyParams
from src.ratios import enumerate_family
from src.special import EULER_GAMMA, digamma, panel_nodes
from src.testfn import TestFunction, WeightFunction

logger = logging.getLogger(__name__)

# Explicit primes in the formula-only prime sum; larger primes enter through the PNT integral
FORMULA_PRIME_BOUND = 10 ** 7
PHI_HAT_BLOCK = 4096
DIGAMMA_HEAD = 60.0


class TermValue(NamedTuple):
    value: float
    budget: float


def term_main(phi: TestFunction) -> float:
    """phi^(0) + int_1^inf phi^(u) du; the integral is empty for sigma <= 1."""
    return phi.phi_hat0 + phi.integral_phi_hat(1.0, phi.sigma)


def katz_sarnak(phi: TestFunction) -> float:
    """Symplectic limit phi^(0) - (1/2) int_{-1}^{1} phi^(u) du."""
    return phi.phi_hat0 - phi.integral_phi_hat(0.0, 1.0)


def weight_log_constant(w: WeightFunction) -> float:
    """log(2 e^{1-gamma}) + (2/w^(0)) int_0^inf w(x) log x dx."""
    return math.log(2.0) + 1.0 - EULER_GAMMA + 2.0 * w.log_moment / w.w_hat0


def term_weight_log(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    return phi.phi_hat0 / fam.L * weight_log_constant(w)


def gamma_kernel(x):
    """(e^{-x/2} + e^{-3x/2})/(1 - e^{-2x}) = 1/(2 sinh(x/2))."""
    return 0.5 / np.sinh(0.5 * np.asarray(x, dtype=float))


def gamma_integrand(phi: TestFunction, fam: FamilyParams, x: float) -> float:
    """Integrand of term_gamma_integral; finite as x -> 0 because phi^(0) - phi^(x/L) = O(x)."""
    return float(gamma_kernel(x)) * (phi.phi_hat0 - float(phi.phi_hat(x / fam.L)))


def term_gamma_integral_with_budget(phi: TestFunction, fam: FamilyParams) -> TermValue:
    """
    (1/L) int_0^inf (phi^(0) - phi^(x/L)) / (2 sinh(x/2)) dx.

    Beyond x = sigma L the difference is phi^(0) and the kernel integrates
    to -log tanh(x/4) in closed form.
    """
    L = fam.L
    edge = phi.sigma * L
    points = [p * L for p in (0.5 * phi.sigma,) if 0.0 < p * L < edge]
    head, err = quad(lambda x: gamma_integrand(phi, fam, x), 0.0, edge, points=points or None,
                     limit=500, epsabs=1e-14, epsrel=1e-13)
    tail = -phi.phi_hat0 * math.log(math.tanh(edge / 4.0))
    return TermValue((head + tail) / L, err / L)


def term_gamma_integral(phi: TestFunction, fam: FamilyParams) -> float:
    return term_gamma_integral_with_budget(phi, fam).value


def prime_power_cutoff(phi: TestFunction, fam: FamilyParams) -> float:
    """Largest prime power that reaches the support of phi^: e^{sigma L / 2}."""
    return math.exp(0.5 * phi.sigma * fam.L)


def _phi_hat_blocks(phi: TestFunction, u: np.ndarray) -> np.ndarray:
    out = np.empty(u.size)
    for start in range(0, u.size, PHI_HAT_BLOCK):
        out[start:start + PHI_HAT_BLOCK] = phi.phi_hat(u[start:start + PHI_HAT_BLOCK])
    return out


def _explicit_prime_sum(phi: TestFunction, L: float, bound: int) -> float:
    """sum over odd p <= bound and j >= 1 of (log p / p^j)(p/(p+1)) phi^(2 j log p / L)."""
    partial = []
    for block in prime_blocks(bound):
        p = block[block > 2].astype(float)
        log_p = np.log(p)
        j = 1
        while p.size and 2.0 * j * log_p[0] / L < phi.sigma:
            u = 2.0 * j * log_p / L
            keep = u < phi.sigma
            p, log_p, u = p[keep], log_p[keep], u[keep]
            terms = log_p * np.exp(-j * log_p) * p / (p + 1.0) * _phi_hat_blocks(phi, u)
            partial.append(math.fsum(terms))
            j += 1
    return math.fsum(partial)


def term_prime_sum_with_budget(phi: TestFunction, fam: FamilyParams, formula_only: bool = False) -> TermValue:
    """
    -(2/L) sum_{p > 2, j >= 1} (log p / p^j)(1 + 1/p)^{-1} phi^(2 j log p / L).

    The sum is finite: terms vanish once p^j > e^{sigma L / 2}.

    Args:
        phi: Test function
        fam: Family scale
        formula_only: Sum primes up to FORMULA_PRIME_BOUND explicitly and
            complete the sum with the prime-number-theorem integral

    Raises:
        ResourceError: If the cutoff exceeds SIEVE_MAX and formula_only is off
    """
    L = fam.L
    cutoff = prime_power_cutoff(phi, fam)
    if cutoff < 3.0:
        return TermValue(0.0, 0.0)
    if not formula_only:
        if cutoff > SIEVE_MAX:
            raise ResourceError(
                f"prime sum needs primes up to {cutoff:.3g}, above the sieve bound {SIEVE_MAX}",
                required=int(min(cutoff, 2 ** 62)),
            )
        value = -2.0 / L * _explicit_prime_sum(phi, L, int(cutoff))
        return TermValue(value, 1e-15 * max(1.0, abs(value)))

    bound = int(min(cutoff, FORMULA_PRIME_BOUND))
    explicit = _explicit_prime_sum(phi, L, bound)
    if bound >= cutoff:
        value = -2.0 / L * explicit
        return TermValue(value, 1e-15 * max(1.0, abs(value)))
    # sum_{p > P} log p/(p+1) phi^(2 log p/L) ~ int_P^inf phi^(2 log x/L) dx/x = (L/2) int phi^
    start = 2.0 * math.log(bound) / L
    tail = -phi.integral_phi_hat(start, phi.sigma)
    defect = abs(chebyshev_theta(bound) - bound) / bound
    # higher prime powers of p > P contribute at most sum_{p > P} log p / p^2 ~ 1/P
    budget = abs(tail) * defect + 2.0 / L * float(phi.phi_hat0) * 1.1 / bound
    logger.warning(
        f"prime sum completed by the PNT integral beyond {bound:.3g} (cutoff {cutoff:.3g}); tail {tail:.6g}"
    )
    return TermValue(-2.0 / L * explicit + tail, budget)


def term_prime_sum(phi: TestFunction, fam: FamilyParams, formula_only: bool = False) -> float:
    return term_prime_sum_with_budget(phi, fam, formula_only).value


def lemma42_lhs(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    """Family average of log(8|d|/pi) against phi on the real line, by enumeration."""
    log_average = enumerate_family(w, fam).log_average
    return (math.log(8.0 / math.pi) + log_average) * phi.phi_hat0 / fam.L


def lemma42_rhs(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    """phi^(0) + (phi^(0)/L)(log(2^4 e) + Mw'(1)/Mw(1))."""
    return phi.phi_hat0 + phi.phi_hat0 / fam.L * (4.0 * math.log(2.0) + 1.0 + w.mellin_logderiv_at_1)


def lemma43_lhs(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    """
    Family average of (1/L) int (psi(1/4 + a/2 - pi i u/L) + psi(1/4 + a/2 + pi i u/L))/2 phi(u) du.

    The parity weights come from the enumerated family; each parity's
    integral is a real-line quadrature with the tail beyond DIGAMMA_HEAD
    handed to phi.tail_integral.
    """
    L = fam.L
    d, weights = enumerate_family(w, fam).signed()
    odd_share = float(np.sum(weights[d < 0]) / np.sum(weights))
    head = min(DIGAMMA_HEAD, phi.support_end(1e-16))
    u, wts = panel_nodes(0.0, head, 0.25 / phi.sigma)
    phi_u = phi.phi(u)

    def parity_integral(a: int) -> float:
        def kernel(x):
            return np.real(digamma(0.25 + 0.5 * a + 1j * math.pi * np.asarray(x) / L))

        body = float(np.sum(wts * kernel(u) * phi_u))
        tail = phi.tail_integral(lambda x: float(kernel(x)), head).real
        return 2.0 * (body + tail) / L

    return (1.0 - odd_share) * parity_integral(0) + odd_share * parity_integral(1)


def lemma43_rhs(phi: TestFunction, fam: FamilyParams) -> float:
    """(phi^(0)/L) log(2^{-3} e^{-gamma}) + term_gamma_integral."""
    return phi.phi_hat0 / fam.L * (-3.0 * math.log(2.0) - EULER_GAMMA) + term_gamma_integral(phi, fam)
