from dataclasses import dataclass
from typing import Iterator

# Radians. Kept as a plain float alias: angles are only ever fed to math.*
Angle = float


@dataclass(frozen=True)
class CosSinPair:
    """
    The (modulus**n * cos, modulus**n * sin) pair a closed form produces.

    Attributes:
        cos_part (float): The real-part side.
        sin_part (float): The imaginary-part side.
    """
    cos_part: float
    sin_part: float

    def __iter__(self) -> Iterator[float]:
        yield self.cos_part
        yield self.sin_part
