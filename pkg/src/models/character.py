from pydantic import BaseModel, computed_field, field_validator


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class QuadraticCharacter(BaseModel):
    """The real primitive character chi_{8d} of conductor 8|d|."""
    model_config = {"frozen": True}

    d: int

    @field_validator("d")
    def validate_d(cls, v: int) -> int:
        if v == 0 or v % 2 == 0:
            raise ValueError(f"d must be odd and nonzero, got {v}")
        if abs(v) >= 2 ** 63:
            raise ValueError("d exceeds 63-bit magnitude")
        if not _is_squarefree(v):
            raise ValueError(f"d must be squarefree, got {v}")
        return v

    @computed_field
    @property
    def a(self) -> int:
        """Parity flag: 1 for negative d, 0 otherwise."""
        return 1 if self.d < 0 else 0

    @computed_field
    @property
    def conductor(self) -> int:
        return 8 * abs(self.d)

    def value(self, n: int) -> int:
        """chi_{8d}(n) for a positive integer n."""
        from src.arith.kronecker import kronecker
        return kronecker(8 * self.d, n)

    def values(self, n_max: int):
        """Character values at 1..n_max as an int8 numpy array."""
        from src.arith.kronecker import character_table
        return character_table(self.d, n_max)
