"""
Ratios prediction of the 1-level density

This module integrates the family-averaged logarithmic derivative
predicted by the ratios conjecture against phi, either on the real line
(r = it) or on the vertical line Re(r) = c'. With u = tL/2pi the
density becomes (1/L) int F(2 pi i u / L) phi(u) du, and F splits into
four named terms:

- arithmetic: 2 zeta'/zeta(1+2r) + 2 A_alpha(r, r)
- log_conductor: average of log(8|d|/pi)
- digamma: average of (psi(1/4+(a-r)/2) + psi(1/4+(a+r)/2))/2
- dual: -2 average of X_d(1/2+r) zeta(1-2r) A(-r, r)

On the real line the arithmetic and dual terms have cancelling poles at
r = 0; for |t| below TAYLOR_T0 both are replaced by an even polynomial
fit through nearby nodes. On the contour the same integrand is regular
and the terms differ from their real-line values by -phi(0)/2 and
+phi(0)/2 (the half residues at r = 0).
"""
import logging
import math
import time
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from src.config import INTEGRAND_PRIME_BOUND, OSCILLATORY_U_MAX, PHI_TRUNCATION, TAYLOR_ORDER, TAYLOR_T0
from src.errors import AccuracyError, DomainError
from src.models import DensityReport, FamilyParams
from src.ratios.conjecture import parity_gamma_factor
from src.ratios.euler import A_alpha_diag_with_budget, A_closed_antidiagonal
from src.ratios.family import auto_average_method, enumerate_family, mellin_power_average
from src.special import digamma, panel_nodes, zeta, zeta_logderiv
from src.testfn import TestFunction, WeightFunction, eval_phi_complex

logger = logging.getLogger(__name__)

PREDICTION_FORMS = ("real", "contour")
HEAD_U_MAX = 60.0
DUAL_T_MAX = 200.0
DUAL_T_STEP = 0.5
IMAG_TOL = 1e-8


class _Line:
    """Integration line r(u) = shift_r + 2 pi i u / L, with phi evaluated at u - i y."""

    def __init__(self, phi: TestFunction, fam: FamilyParams, form: str):
        self.phi = phi
        self.L = fam.L
        self.c = fam.c_prime if form == "contour" else 0.0
        self.y = self.L * self.c / (2.0 * math.pi)

    def r(self, u):
        return self.c + 2j * math.pi * np.asarray(u) / self.L

    def phi_at(self, u):
        u = np.asarray(u, dtype=float)
        if self.y == 0.0:
            return self.phi.phi(u).astype(complex)
        return eval_phi_complex(self.phi, u - 1j * self.y)

    @property
    def growth(self) -> float:
        return math.exp(2.0 * math.pi * self.phi.sigma * self.y)

    def nodes(self, u_max: float, scale: float = 1.0, order: int = 16) -> Tuple[np.ndarray, np.ndarray]:
        # half-periods of phi and of the family phases |d|^{-2 pi i u/L}
        width = scale * 0.5 * min(0.5 / self.phi.sigma, 0.35)
        return panel_nodes(0.0, u_max, width, order)

    def symmetric_sum(self, kernel: Callable, u: np.ndarray, w: np.ndarray,
                      mirror: Optional[Callable] = None) -> complex:
        """(1/L) sum_k w_k [K(r(u_k)) phi(u_k - iy) + K(r(-u_k)) phi(-u_k - iy)]."""
        if u.size == 0:
            return 0j
        plus = kernel(self.r(u))
        minus = mirror(plus) if mirror is not None else kernel(self.r(-u))
        value = np.sum(w * (plus * self.phi_at(u) + minus * self.phi_at(-u)))
        return complex(value) / self.L


def _even_fit(t_small: np.ndarray, t0: float, order: int, evaluate: Callable) -> np.ndarray:
    """Even polynomial in t through nodes t0, 2 t0, ... fitted to Re(evaluate)."""
    count = order // 2 + 1
    t_nodes = t0 * np.arange(1, count + 1)
    values = np.real(evaluate(1j * t_nodes))
    powers = 2 * np.arange(count)
    coefficients = np.linalg.solve(t_nodes[:, None] ** powers[None, :], values)
    return (t_small[:, None] ** powers[None, :]) @ coefficients


def _with_taylor_core(kernel: Callable, line: _Line, order: int) -> Callable:
    """Wrap a kernel singular at r = 0 so that |t| < TAYLOR_T0 uses the even fit."""
    if line.c != 0.0:
        return kernel

    def wrapped(r):
        r = np.asarray(r, dtype=complex)
        t = r.imag
        small = np.abs(t) < TAYLOR_T0
        out = np.empty(r.shape, dtype=complex)
        if np.any(~small):
            out[~small] = kernel(r[~small])
        if np.any(small):
            out[small] = _even_fit(t[small], TAYLOR_T0, order, kernel)
        return out

    return wrapped


class _Budget:
    def __init__(self):
        self.parts: Dict[str, float] = {}

    def add(self, name: str, amount: float) -> None:
        self.parts[name] = self.parts.get(name, 0.0) + float(abs(amount))

    @property
    def total(self) -> float:
        return math.fsum(self.parts.values())


def _arithmetic_term(line: _Line, u_max: float, scale: float, order: int, budget: _Budget) -> complex:
    euler_budget = [0.0]

    def kernel(r):
        value, bound = A_alpha_diag_with_budget(r, INTEGRAND_PRIME_BOUND)
        euler_budget[0] = max(euler_budget[0], bound)
        return 2.0 * zeta_logderiv(1.0 + 2.0 * r) + 2.0 * value

    wrapped = _with_taylor_core(kernel, line, order)
    u, w = line.nodes(u_max, scale)
    value = line.symmetric_sum(wrapped, u, w)
    # |2 zeta'/zeta + 2 A_alpha| grows at most like log t on and right of the 1-line
    t_end = 2.0 * math.pi * u_max / line.L
    size = 2.0 * (math.log(t_end + 2.0) + 1.0) / (1.0 + line.c)
    budget.add("arithmetic_truncation", 2.0 / line.L * size * line.growth * line.phi.envelope_integral(u_max))
    budget.add("arithmetic_euler", 2.0 / line.L * euler_budget[0] * line.phi.envelope_integral(0.0) * line.growth)
    return value


def _log_conductor_term(line: _Line, log_average: float, u_head: float, scale: float) -> complex:
    constant = math.log(8.0 / math.pi) + log_average
    if line.y == 0.0:
        return constant * line.phi.phi_hat0 / line.L
    u, w = line.nodes(u_head, scale)
    head = line.symmetric_sum(lambda r: np.ones(r.shape, dtype=complex), u, w)
    tail = (line.phi.tail_integral(lambda x: 1.0, u_head, line.y)
            + line.phi.tail_integral(lambda x: 1.0, u_head, -line.y)) / line.L
    return constant * (head + tail)


def _digamma_kernel(r):
    r = np.asarray(r, dtype=complex)
    total = 0j
    for a in (0, 1):
        total = total + 0.5 * (digamma(0.25 + (a - r) / 2.0) + digamma(0.25 + (a + r) / 2.0))
    return 0.5 * total


def _digamma_term(line: _Line, u_head: float, scale: float) -> complex:
    u, w = line.nodes(u_head, scale)
    head = line.symmetric_sum(_digamma_kernel, u, w)

    def along(sign: int) -> Callable:
        return lambda x: complex(_digamma_kernel(line.r(sign * x)))

    tail = (line.phi.tail_integral(along(1), u_head, line.y)
            + line.phi.tail_integral(along(-1), u_head, -line.y)) / line.L
    return head + tail


def _dual_kernel(power: Callable) -> Callable:
    def kernel(r):
        r = np.asarray(r, dtype=complex)
        return (-2.0 * np.exp(r * math.log(math.pi / 8.0)) * parity_gamma_factor(r) * power(r)
                * zeta(1.0 - 2.0 * r) * A_closed_antidiagonal(r))
    return kernel


def _dual_cutoff(kernel: Callable, smooth_kernel: Callable, line: _Line) -> Tuple[float, float]:
    """
    Truncation point of the dual integral and the kernel size beyond it.

    The integrated kernel is sampled on t in [1, DUAL_T_MAX]. The cutoff is
    the first t from which |kernel| * envelope stays below PHI_TRUNCATION. An
    exact family average keeps an oscillating remainder that may never get
    there; the cutoff then falls back to where `smooth_kernel` (the Mellin
    main term) does, and the remainder beyond it is charged to the budget.

    Returns:
        (u cutoff, largest |kernel| sampled past the cutoff)
    """
    t = np.arange(1.0, DUAL_T_MAX + 0.5 * DUAL_T_STEP, DUAL_T_STEP)
    r = line.c + 1j * t
    envelope = line.phi.envelope(t * line.L / (2.0 * math.pi)) * line.growth
    sizes = np.abs(kernel(r))

    def first_negligible(values: np.ndarray) -> int:
        suffix = np.maximum.accumulate((values * envelope)[::-1])[::-1]
        below = np.flatnonzero(suffix < PHI_TRUNCATION)
        return int(below[0]) if below.size else -1

    k = first_negligible(sizes)
    if k < 0:
        k = first_negligible(np.abs(smooth_kernel(r)))
        if k < 0:
            k = t.size - 1
        logger.info(f"dual kernel stays at {float(np.max(sizes[k:])):.1e} past t={t[k]:.1f}; charged to the budget")
    return float(t[k] * line.L / (2.0 * math.pi)), float(np.max(sizes[k:]))


def _dual_term(line: _Line, w: WeightFunction, fam: FamilyParams, method: str, scale: float,
               order: int, budget: _Budget) -> Tuple[complex, float]:
    smooth_kernel = _dual_kernel(lambda r: mellin_power_average(r, w, fam))
    kernel = _dual_kernel(enumerate_family(w, fam).power_average) if method == "exact" else smooth_kernel

    wrapped = _with_taylor_core(kernel, line, order)
    u_dual, kernel_tail = _dual_cutoff(kernel, smooth_kernel, line)
    u, weights = line.nodes(u_dual, scale, order=8)
    # Gamma ratio, zeta and the power average all have real coefficients,
    # so the kernel at the mirrored point r(-u) is the conjugate of the kernel at r(u)
    value = line.symmetric_sum(wrapped, u, weights, mirror=np.conj)
    budget.add("dual_truncation", 2.0 / line.L * kernel_tail * line.growth * line.phi.envelope_integral(u_dual))
    return value, u_dual


def predict_density(
    phi: TestFunction,
    w: WeightFunction,
    fam: FamilyParams,
    form: str = "real",
    u_max: Optional[float] = None,
    taylor_order: int = TAYLOR_ORDER,
    step_scale: float = 1.0,
    method: str = "",
) -> DensityReport:
    """
    Ratios prediction of the 1-level density D*(phi; X).

    Args:
        phi: Test function
        w: Family weight
        fam: Family scale; `fam.c_prime` is the abscissa of the contour form
        form: "real" (line r = it) or "contour" (line Re r = c')
        u_max: Cutoff of the oscillatory terms in units of mean spacing; by
            default where phi's envelope drops below PHI_TRUNCATION, capped at OSCILLATORY_U_MAX
        taylor_order: Order of the even fit used for |t| < TAYLOR_T0
        step_scale: Multiplies the quadrature panel width
        method: Family averaging method; default chooses by X

    Returns:
        DensityReport with terms arithmetic, log_conductor, digamma and dual

    Raises:
        DomainError: For an unknown form
        AccuracyError: If the terms do not sum to a real number
    """
    if form not in PREDICTION_FORMS:
        raise DomainError(f"Unknown prediction form {form!r}; available: {', '.join(PREDICTION_FORMS)}")
    start = time.perf_counter()
    method = method or auto_average_method(fam)
    line = _Line(phi, fam, form)
    if u_max is None:
        u_max = min(phi.support_end(PHI_TRUNCATION, line.y), OSCILLATORY_U_MAX)
    u_head = min(u_max, HEAD_U_MAX)
    budget = _Budget()

    if method == "exact":
        log_average = enumerate_family(w, fam).log_average
    else:
        # average of log|d| from the derivative of the Mellin main term at r = 0
        log_average = math.log(fam.X) + w.mellin_logderiv_at_1

    complex_terms = {
        "arithmetic": _arithmetic_term(line, u_max, step_scale, taylor_order, budget),
        "log_conductor": _log_conductor_term(line, log_average, u_head, step_scale),
        "digamma": _digamma_term(line, u_head, step_scale),
    }
    complex_terms["dual"], u_dual = _dual_term(line, w, fam, method, step_scale, taylor_order, budget)

    imag = abs(sum(v.imag for v in complex_terms.values()))
    if imag > IMAG_TOL:
        raise AccuracyError(f"prediction has imaginary part {imag:.2e}", achieved=imag)

    terms = {name: value.real for name, value in complex_terms.items()}
    elapsed = time.perf_counter() - start
    logger.info(f"predict_density[{form}] X={fam.X:.3g} {phi.spec}: {sum(terms.values()):.10f} in {elapsed:.1f}s")
    return DensityReport.from_terms(
        "prediction",
        terms,
        error_budget=budget.total,
        params={
            "X": fam.X, "L": fam.L, "w": w.spec, "phi": phi.spec, "sigma": phi.sigma,
            "form": form, "c_prime": line.c, "d_cutoff": fam.d_cutoff, "u_max": u_max,
            "u_dual": u_dual, "taylor_order": taylor_order, "step_scale": step_scale,
        },
        diagnostics={
            "average_method": method,
            "imaginary_part": imag,
            "complex_terms": {k: [v.real, v.imag] for k, v in complex_terms.items()},
            "budget_parts": budget.parts,
            "wall_time": elapsed,
        },
    )


def arithmetic_line_integral(phi: TestFunction, fam: FamilyParams, form: str = "contour",
                             u_max: Optional[float] = None) -> Tuple[float, float]:
    """
    (1/2 pi i) int (2 zeta'/zeta(1+2r) + 2 A_alpha(r, r)) phi(iLr/2pi) dr on one line.

    Returns:
        (value, error budget)
    """
    line = _Line(phi, fam, form)
    if u_max is None:
        u_max = min(phi.support_end(PHI_TRUNCATION, line.y), OSCILLATORY_U_MAX)
    budget = _Budget()
    value = _arithmetic_term(line, u_max, 1.0, TAYLOR_ORDER, budget)
    return value.real, budget.total


def dual_line_integral(phi: TestFunction, w: WeightFunction, fam: FamilyParams, form: str = "contour",
                       method: str = "") -> Tuple[float, float]:
    """
    The dual term -2 avg X_d(1/2+r) zeta(1-2r) A(-r, r) integrated against phi on one line.

    Returns:
        (value, error budget)
    """
    line = _Line(phi, fam, form)
    budget = _Budget()
    value, _ = _dual_term(line, w, fam, method or auto_average_method(fam), 1.0, TAYLOR_ORDER, budget)
    return value.real, budget.total


def digamma_line_integral(phi: TestFunction, fam: FamilyParams) -> float:
    """Real-line digamma term: the family average of the two Gamma'/Gamma factors against phi."""
    line = _Line(phi, fam, "real")
    u_max = min(phi.support_end(PHI_TRUNCATION), OSCILLATORY_U_MAX)
    return _digamma_term(line, min(u_max, HEAD_U_MAX), 1.0).real
