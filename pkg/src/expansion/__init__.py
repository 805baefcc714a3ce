"""Explicit expansion of the 1-level density and its contour identities."""
from src.expansion.terms import (
    gamma_integrand,
    gamma_kernel,
    katz_sarnak,
    lemma42_lhs,
    lemma42_rhs,
    lemma43_lhs,
    lemma43_rhs,
    prime_power_cutoff,
    term_gamma_integral,
    term_main,
    term_prime_sum,
    term_prime_sum_with_budget,
    term_weight_log,
    weight_log_constant,
)
from src.expansion.transition import (
    glog_sides,
    h2_direct,
    h2_mellin,
    j_asymptotic,
    j_bracket,
    j_exact,
    j_exact_with_budget,
    mellin_g_hat_on_line,
    reflected_mellin_g_hat,
    reflection_sides,
    sampled_mellin_g_hat,
)
from src.expansion.contour import big_I, lemma41_lhs_contour, lemma45_rhs
from src.expansion.density import J_MODES, expansion_density

__all__ = [
    "gamma_integrand",
    "gamma_kernel",
    "katz_sarnak",
    "lemma42_lhs",
    "lemma42_rhs",
    "lemma43_lhs",
    "lemma43_rhs",
    "prime_power_cutoff",
    "term_gamma_integral",
    "term_main",
    "term_prime_sum",
    "term_prime_sum_with_budget",
    "term_weight_log",
    "weight_log_constant",
    "glog_sides",
    "h2_direct",
    "h2_mellin",
    "j_asymptotic",
    "j_bracket",
    "j_exact",
    "j_exact_with_budget",
    "mellin_g_hat_on_line",
    "reflected_mellin_g_hat",
    "reflection_sides",
    "sampled_mellin_g_hat",
    "big_I",
    "lemma41_lhs_contour",
    "lemma45_rhs",
    "J_MODES",
    "expansion_density",
]
