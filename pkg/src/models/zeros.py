from typing import List

from pydantic import BaseModel, field_validator, model_validator

from src.models.character import QuadraticCharacter


class ZeroSet(BaseModel):
    """Positive zero ordinates of one L(s, chi_{8d}) up to a height."""
    character: QuadraticCharacter
    height: float
    ordinates: List[float]
    count_estimate: float
    complete_flag: bool

    @field_validator("height")
    def validate_height(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("height must be positive")
        return v

    @model_validator(mode="after")
    def check_ordinates(self) -> "ZeroSet":
        previous = 0.0
        for gamma in self.ordinates:
            if not previous < gamma <= self.height:
                raise ValueError(f"ordinates must increase inside (0, {self.height}]")
            previous = gamma
        if abs(len(self.ordinates) - self.count_estimate) > 2:
            self.complete_flag = False
        return self
