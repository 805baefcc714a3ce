import logging
import math

from pydantic import BaseModel, field_validator, model_validator

logger = logging.getLogger(__name__)


class FamilyParams(BaseModel):
    """Scale of the family F*(X) and the contour abscissa used by the contour forms."""
    model_config = {"frozen": True}

    X: float
    d_cutoff: int
    c_prime: float = 0.1

    @field_validator("X")
    def validate_X(cls, v: float) -> float:
        # L = log(X/(2 pi e)) must be positive
        if not v > 2 * math.pi * math.e:
            raise ValueError(f"X must exceed 2*pi*e, got {v}")
        return v

    @field_validator("d_cutoff")
    def validate_cutoff(cls, v: int) -> int:
        if v < 1:
            raise ValueError("d_cutoff must be positive")
        return v

    @field_validator("c_prime")
    def validate_c_prime(cls, v: float) -> float:
        if not 0.0 < v < 0.25:
            raise ValueError(f"c_prime must lie in (0, 1/4), got {v}")
        return v

    @model_validator(mode="after")
    def warn_small_c_prime(self) -> "FamilyParams":
        if self.c_prime <= 1.0 / math.log(self.X):
            logger.warning(
                f"c_prime={self.c_prime} is not above 1/log X={1.0 / math.log(self.X):.4f}; "
                "contour identities still hold, the ratios error shape does not"
            )
        return self

    @property
    def L(self) -> float:
        return math.log(self.X / (2 * math.pi * math.e))

    def with_cutoff(self, d_cutoff: int) -> "FamilyParams":
        return FamilyParams(X=self.X, d_cutoff=d_cutoff, c_prime=self.c_prime)

    def with_c_prime(self, c_prime: float) -> "FamilyParams":
        return FamilyParams(X=self.X, d_cutoff=self.d_cutoff, c_prime=c_prime)


class ShiftPair(BaseModel):
    """Shifts (alpha, gamma) of a ratio L(1/2+alpha)/L(1/2+gamma)."""
    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    alpha: complex
    gamma_shift: complex

    @field_validator("alpha", mode="before")
    def validate_alpha(cls, v) -> complex:
        v = complex(v)
        if not abs(v.real) < 0.25:
            raise ValueError(f"|Re(alpha)| must be below 1/4, got {v}")
        return v

    @field_validator("gamma_shift", mode="before")
    def validate_gamma(cls, v) -> complex:
        v = complex(v)
        if not v.real < 0.25:
            raise ValueError(f"Re(gamma_shift) must be below 1/4, got {v}")
        return v

    @property
    def r(self) -> complex:
        """Common value on the diagonal alpha = gamma_shift."""
        if self.alpha != self.gamma_shift:
            raise ValueError("r is only defined on the diagonal")
        return self.alpha
