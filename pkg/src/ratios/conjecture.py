"""
Ratios conjecture for the quadratic family

This module evaluates the functional-equation factor X_d(s), the
conjectured family average of L(1/2+alpha)/L(1/2+gamma), and its
logarithmic derivative on the diagonal. Family averages of X_d reduce to
the parity-averaged Gamma ratio times the average of |d|^{-r}, because
both signs of every magnitude carry the same weight.
"""
import logging
import math

import numpy as np

from src.errors import DomainError, PoleError
from src.models import FamilyParams, QuadraticCharacter, ShiftPair
from src.ratios.euler import A, A_alpha_diag, A_closed_antidiagonal
from src.ratios.family import auto_average_method, enumerate_family, family_average_power
from src.special import EULER_GAMMA, digamma, gamma_ratio, zeta, zeta_logderiv
from src.testfn import WeightFunction

logger = logging.getLogger(__name__)


def X_d(char: QuadraticCharacter, s):
    """
    X_d(s) = Gamma((1+a-s)/2)/Gamma((a+s)/2) * (pi/(8|d|))^{s-1/2}.

    A pole of the numerator Gamma gives infinity (logged by gamma_ratio).
    """
    s_arr = np.asarray(s, dtype=complex)
    a = char.a
    value = gamma_ratio((1 + a - s_arr) / 2.0, (a + s_arr) / 2.0) * np.exp(
        (s_arr - 0.5) * math.log(math.pi / char.conductor)
    )
    return complex(value) if np.ndim(s) == 0 else value


def logderiv_X(char: QuadraticCharacter, r):
    """X_d'/X_d at 1/2 + r: log(pi/8|d|) - psi(1/4+(a-r)/2)/2 - psi(1/4+(a+r)/2)/2."""
    r_arr = np.asarray(r, dtype=complex)
    a = char.a
    value = (
        math.log(math.pi / char.conductor)
        - 0.5 * digamma(0.25 + (a - r_arr) / 2.0)
        - 0.5 * digamma(0.25 + (a + r_arr) / 2.0)
    )
    return complex(value) if np.ndim(r) == 0 else value


def parity_gamma_factor(r):
    """Average over a in {0, 1} of Gamma(1/4+(a-r)/2)/Gamma(1/4+(a+r)/2)."""
    r_arr = np.asarray(r, dtype=complex)
    value = 0.5 * (
        gamma_ratio(0.25 - r_arr / 2.0, 0.25 + r_arr / 2.0)
        + gamma_ratio(0.75 - r_arr / 2.0, 0.75 + r_arr / 2.0)
    )
    return complex(value) if np.ndim(r) == 0 else value


def average_X_d(r, w: WeightFunction, fam: FamilyParams, method: str = ""):
    """
    Family average of X_d(1/2 + r).

    Equals (pi/8)^r * parity_gamma_factor(r) * average(|d|^{-r}).
    """
    method = method or auto_average_method(fam)
    r_arr = np.asarray(r, dtype=complex)
    power = family_average_power(r_arr, w, fam, method)
    value = np.exp(r_arr * math.log(math.pi / 8.0)) * parity_gamma_factor(r_arr) * power
    return complex(value) if np.ndim(r) == 0 else value


def ratios_rhs(shifts: ShiftPair, w: WeightFunction, fam: FamilyParams, method: str = "") -> complex:
    """
    Conjectured family average of L(1/2+alpha, chi_{8d})/L(1/2+gamma, chi_{8d}).

    The first term is zeta(1+2a)/zeta(1+a+g) A(a, g); the dual term is the
    family average of X_d(1/2+a) zeta(1-2a)/zeta(1-a+g) A(-a, g), which
    vanishes on the diagonal a = g where zeta(1-a+g) has its pole.

    Raises:
        PoleError: If alpha + gamma = 0 or alpha = 0
    """
    alpha, gamma = shifts.alpha, shifts.gamma_shift
    if abs(fam.X) < abs(gamma.imag) or abs(fam.X) < abs(alpha.imag):
        raise DomainError("shift imaginary parts must stay below X")
    if gamma.real < 1.0 / math.log(fam.X):
        logger.warning(f"Re(gamma)={gamma.real} is below 1/log X; the conjecture is stated for larger shifts")
    if alpha + gamma == 0:
        raise PoleError("zeta(1+alpha+gamma) is singular at alpha + gamma = 0",
                        residue=1.0, constant=EULER_GAMMA)
    if alpha == 0:
        raise PoleError("zeta(1+2 alpha) is singular at alpha = 0", residue=0.5, constant=EULER_GAMMA)

    first = zeta(1 + 2 * alpha) / zeta(1 + alpha + gamma) * A(alpha, gamma)
    if alpha == gamma:
        return complex(first)
    dual_factor = zeta(1 - 2 * alpha) / zeta(1 - alpha + gamma) * A(-alpha, gamma)
    if alpha.real < 0:
        # negative powers of |d| grow; only the enumerated average is meaningful there
        power = enumerate_family(w, fam).power_average(alpha)
        average = np.exp(alpha * math.log(math.pi / 8.0)) * parity_gamma_factor(alpha) * power
    else:
        average = average_X_d(alpha, w, fam, method)
    return complex(first + average * dual_factor)


def logderiv_avg(r, w: WeightFunction, fam: FamilyParams, method: str = "") -> complex:
    """
    Family average of L'/L(1/2 + r, chi_{8d}) predicted by the ratios conjecture.

    zeta'/zeta(1+2r) + A_alpha(r, r) - avg X_d(1/2+r) zeta(1-2r) A(-r, r).

    Raises:
        DomainError: At r = 0, where the two singular terms must be combined
    """
    r = complex(r)
    if r == 0:
        raise DomainError("logderiv_avg is singular at r = 0; use the combined integrand")
    if not 0 <= r.real < 0.25:
        raise DomainError(f"logderiv_avg needs 0 <= Re(r) < 1/4, got {r}")
    if r.real < 1.0 / math.log(fam.X):
        logger.warning(f"Re(r)={r.real} is below 1/log X")
    dual = average_X_d(r, w, fam, method) * zeta(1 - 2 * r) * A_closed_antidiagonal(r)
    return complex(zeta_logderiv(1 + 2 * r) + A_alpha_diag(r) - dual)
