"""Ratios-conjecture prediction: Euler products, family averages and the predicted density."""
from src.ratios.euler import (
    A,
    A_with_budget,
    A_alpha_diag,
    A_alpha_diag_with_budget,
    A_closed_antidiagonal,
    EulerValue,
)
from src.ratios.family import (
    FamilyEnumeration,
    auto_average_method,
    enumerate_family,
    family_average_power,
    make_family,
    mellin_power_average,
)
from src.ratios.conjecture import X_d, average_X_d, logderiv_X, logderiv_avg, parity_gamma_factor, ratios_rhs
from src.ratios.prediction import (
    PREDICTION_FORMS,
    arithmetic_line_integral,
    digamma_line_integral,
    dual_line_integral,
    predict_density,
)

__all__ = [
    "A",
    "A_with_budget",
    "A_alpha_diag",
    "A_alpha_diag_with_budget",
    "A_closed_antidiagonal",
    "EulerValue",
    "FamilyEnumeration",
    "auto_average_method",
    "enumerate_family",
    "family_average_power",
    "make_family",
    "mellin_power_average",
    "X_d",
    "average_X_d",
    "logderiv_X",
    "logderiv_avg",
    "parity_gamma_factor",
    "ratios_rhs",
    "PREDICTION_FORMS",
    "arithmetic_line_integral",
    "digamma_line_integral",
    "dual_line_integral",
    "predict_density",
]
