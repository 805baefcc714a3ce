"""Empirical 1-level density from computed zeros, and direct character averages."""
from src.empirical.characters import char_average, char_average_main_term, weight_total
from src.empirical.density import (
    density_from_zero_sets,
    empirical_density,
    usp_density,
    zero_sum,
    zero_tail_bound,
)

__all__ = [
    "char_average",
    "char_average_main_term",
    "weight_total",
    "density_from_zero_sets",
    "empirical_density",
    "usp_density",
    "zero_sum",
    "zero_tail_bound",
]
