import math
from typing import Any, Dict, List, Literal

from pydantic import BaseModel, Field, field_validator, model_validator


class DensityReport(BaseModel):
    """A 1-level density value with its per-term breakdown and error budget."""
    value: float
    method: Literal["empirical", "prediction", "expansion"]
    terms: Dict[str, float]
    error_budget: float = 0.0
    params: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("error_budget")
    def validate_budget(cls, v: float) -> float:
        if v < 0 or math.isnan(v):
            raise ValueError("error_budget must be nonnegative")
        return v

    @model_validator(mode="after")
    def check_bookkeeping(self) -> "DensityReport":
        total = math.fsum(self.terms.values())
        if abs(total - self.value) > 1e-12 * max(1.0, abs(self.value)):
            raise ValueError(f"terms sum to {total}, value is {self.value}")
        return self

    @classmethod
    def from_terms(cls, method: str, terms: Dict[str, float], **kwargs) -> "DensityReport":
        """Build a report whose value is the exact sum of its terms."""
        return cls(value=math.fsum(terms.values()), method=method, terms=terms, **kwargs)


class Residual(BaseModel):
    """One checked identity: |left - right| (possibly rescaled) against a tolerance."""
    label: str
    left: float
    right: float
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


class VerificationReport(BaseModel):
    """Outcome of one named verification."""
    name: str
    residuals: List[Residual]
    params: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.residuals)

    @property
    def worst(self) -> float:
        """Largest residual relative to its tolerance."""
        return max((r.residual / r.tolerance for r in self.residuals), default=0.0)

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump()
        data["passed"] = self.passed
        for entry, residual in zip(data["residuals"], self.residuals):
            entry["passed"] = residual.passed
        return data
