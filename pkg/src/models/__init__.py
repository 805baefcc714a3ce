"""Data models shared across the lab's modules."""
from src.models.character import QuadraticCharacter
from src.models.family import FamilyParams, ShiftPair
from src.models.report import DensityReport, Residual, VerificationReport
from src.models.zeros import ZeroSet
from src.models.run_config import RunConfig

__all__ = [
    "QuadraticCharacter",
    "FamilyParams",
    "ShiftPair",
    "DensityReport",
    "Residual",
    "VerificationReport",
    "ZeroSet",
    "RunConfig",
]
