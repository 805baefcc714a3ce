"""
Contour identities

The two pieces of the prediction that move to the line Re(r) = c': the
arithmetic integral, which equals the prime-power sum, and the dual
integral ("big I"), which equals phi(0)/2 minus the symplectic integral
plus the J(X) constant. Both need phi off the real axis, so only test
functions with a closed-form entire extension are accepted.
"""
import logging

from src.errors import UnsupportedKindError
from src.expansion.transition import j_asymptotic
from src.models import FamilyParams
from src.ratios import arithmetic_line_integral, dual_line_integral
from src.testfn import TestFunction, WeightFunction

logger = logging.getLogger(__name__)

ENTIRE_KINDS = ("fejer",)


def _require_entire(phi: TestFunction) -> None:
    if phi.kind not in ENTIRE_KINDS:
        raise UnsupportedKindError(
            f"{phi.kind} has no closed-form entire extension; contour identities need one of {ENTIRE_KINDS}"
        )


def lemma41_lhs_contour(phi: TestFunction, fam: FamilyParams) -> float:
    """
    (1/2 pi i) int_{(c')} (2 zeta'/zeta(1+2r) + 2 A_alpha(r, r)) phi(iLr/2pi) dr.

    Raises:
        UnsupportedKindError: For test functions without a closed entire extension
    """
    _require_entire(phi)
    value, budget = arithmetic_line_integral(phi, fam, form="contour")
    logger.info(f"arithmetic contour integral at c'={fam.c_prime}: {value:.12f} (budget {budget:.1e})")
    return value


def big_I(phi: TestFunction, w: WeightFunction, fam: FamilyParams, method: str = "") -> float:
    """
    Dual integral on Im(tau) = -L c'/2 pi.

    -(zeta(2)/L) int [Gamma quotients] (pi/8)^{2 pi i tau/L} (1 + (2 - 2^{4 pi i tau/L + 1})/(4 - 2^{4 pi i tau/L}))
    zeta(1 - 4 pi i tau/L)/zeta(2 - 4 pi i tau/L) phi(tau) avg|d|^{-2 pi i tau/L} dtau, which is the
    family average of -2 X_d(1/2+r) zeta(1-2r) A(-r, r) with A in its anti-diagonal closed form.

    Raises:
        UnsupportedKindError: For test functions without a closed entire extension
    """
    _require_entire(phi)
    value, budget = dual_line_integral(phi, w, fam, form="contour", method=method)
    logger.info(f"dual contour integral at c'={fam.c_prime}: {value:.12f} (budget {budget:.1e})")
    return value


def lemma45_rhs(phi: TestFunction, w: WeightFunction, fam: FamilyParams) -> float:
    """phi(0)/2 - (1/2) int_{-1}^{1} phi^ + (phi^(1)/L) j_bracket(w)."""
    return 0.5 * phi.phi0 - phi.integral_phi_hat(0.0, 1.0) + j_asymptotic(phi, w, fam)
