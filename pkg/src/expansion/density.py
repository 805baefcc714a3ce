"""
Explicit expansion of the 1-level density

Assembles the five terms of the expansion: the main term, the weight-log
term, the digamma integral, the prime-power sum and the transition term
J(X), exact or in its asymptotic form.
"""
import logging
import math
import time
from typing import Optional

from src.config import SIEVE_MAX
from src.errors import ConfigError
from src.expansion.terms import (
    katz_sarnak,
    prime_power_cutoff,
    term_gamma_integral_with_budget,
    term_main,
    term_prime_sum_with_budget,
    term_weight_log,
)
from src.expansion.transition import j_asymptotic, j_exact_with_budget
from src.models import DensityReport, FamilyParams
from src.testfn import TestFunction, WeightFunction

logger = logging.getLogger(__name__)

J_MODES = ("exact", "asymptotic")


def expansion_density(
    phi: TestFunction,
    w: WeightFunction,
    fam: FamilyParams,
    j_mode: str = "exact",
    formula_only: Optional[bool] = None,
) -> DensityReport:
    """
    Explicit expansion of D*(phi; X).

    Args:
        phi: Test function
        w: Family weight
        fam: Family scale
        j_mode: "exact" (Mellin representation of J) or "asymptotic" (phi^(1)/L times a constant)
        formula_only: Complete the prime sum with the PNT integral; by
            default switched on only when the sum would exceed the sieve bound

    Returns:
        DensityReport with terms main, weight_log, gamma_integral, prime_sum and J

    Raises:
        ConfigError: For an unknown j_mode
        ResourceError: If formula_only is False and the prime sum exceeds the sieve bound
    """
    if j_mode == "asym":
        j_mode = "asymptotic"
    if j_mode not in J_MODES:
        raise ConfigError(f"Unknown j_mode {j_mode!r}; available: {', '.join(J_MODES)}")
    start = time.perf_counter()
    if formula_only is None:
        formula_only = prime_power_cutoff(phi, fam) > SIEVE_MAX
        if formula_only:
            logger.warning(f"X={fam.X:.3g}: prime sum beyond the sieve bound, using formula-only evaluation")

    gamma_term = term_gamma_integral_with_budget(phi, fam)
    prime_term = term_prime_sum_with_budget(phi, fam, formula_only)
    budget_parts = {"gamma_integral": gamma_term.budget, "prime_sum": prime_term.budget}
    if j_mode == "exact":
        j_term = j_exact_with_budget(phi, w, fam)
        j_value = j_term.value
        budget_parts["J"] = j_term.budget
    else:
        j_value = j_asymptotic(phi, w, fam)

    terms = {
        "main": term_main(phi),
        "weight_log": term_weight_log(phi, w, fam),
        "gamma_integral": gamma_term.value,
        "prime_sum": prime_term.value,
        "J": j_value,
    }
    elapsed = time.perf_counter() - start
    logger.info(f"expansion_density X={fam.X:.3g} {phi.spec} j={j_mode}: {sum(terms.values()):.10f} "
                f"in {elapsed:.1f}s")
    return DensityReport.from_terms(
        "expansion",
        terms,
        error_budget=math.fsum(budget_parts.values()),
        params={
            "X": fam.X, "L": fam.L, "w": w.spec, "phi": phi.spec, "sigma": phi.sigma,
            "j_mode": j_mode, "formula_only": formula_only,
            "prime_power_cutoff": prime_power_cutoff(phi, fam),
        },
        diagnostics={
            "katz_sarnak": katz_sarnak(phi),
            "j_asymptotic": j_asymptotic(phi, w, fam),
            "budget_parts": budget_parts,
            "wall_time": elapsed,
        },
    )
