"""Evaluation of L(1/2+it, chi_{8d}) and its zero ordinates."""
from src.zeros.evaluator import LValue, eval_L, eval_L_at, hardy_theta, hardy_Z
from src.zeros.finder import (
    find_zeros,
    find_zeros_many,
    positive_count_estimate,
    scan_step,
    zero_count_estimate,
)
from src.zeros.cache import cache_path, load_zeros, store_zeros

__all__ = [
    "LValue",
    "eval_L",
    "eval_L_at",
    "hardy_theta",
    "hardy_Z",
    "find_zeros",
    "find_zeros_many",
    "positive_count_estimate",
    "scan_step",
    "zero_count_estimate",
    "cache_path",
    "load_zeros",
    "store_zeros",
]
