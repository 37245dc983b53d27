"""Circulant matrices: model, singularity decision, determinant oracles."""

from .spec import CirculantSpec
from .singularity import SingularityVerdict, is_singular, recurrence_divisors
from .determinant import det_resultant, det_elimination, bareiss_determinant
from .screen import ResidueScreen

__all__ = [
    "CirculantSpec",
    "SingularityVerdict",
    "is_singular",
    "recurrence_divisors",
    "det_resultant",
    "det_elimination",
    "bareiss_determinant",
    "ResidueScreen",
]
