"""Weight and test function families with their transforms."""
from src.testfn.weights import WeightFunction, make_weight
from src.testfn.functions import (
    Bump2TestFunction,
    FejerTestFunction,
    TestFunction,
    eval_phi_complex,
    make_testfn,
    parse_testfn,
)

__all__ = [
    "WeightFunction",
    "make_weight",
    "TestFunction",
    "FejerTestFunction",
    "Bump2TestFunction",
    "make_testfn",
    "parse_testfn",
    "eval_phi_complex",
]
