"""Special functions and the Fourier/Mellin transform engine."""
from src.special.zeta import (
    EULER_GAMMA,
    zeta,
    zeta_derivative,
    zeta_logderiv,
    zeta_prime_over_zeta_at_2,
)
from src.special.gamma import digamma, gamma_ratio
from src.special.transforms import (
    TransformGrid,
    fourier_at,
    fourier_cosine_grid,
    gauss_legendre,
    mellin_at,
    mellin_on_line,
    panel_nodes,
)

__all__ = [
    "EULER_GAMMA",
    "zeta",
    "zeta_derivative",
    "zeta_logderiv",
    "zeta_prime_over_zeta_at_2",
    "digamma",
    "gamma_ratio",
    "TransformGrid",
    "fourier_at",
    "fourier_cosine_grid",
    "gauss_legendre",
    "mellin_at",
    "mellin_on_line",
    "panel_nodes",
]
