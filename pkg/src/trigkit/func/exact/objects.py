import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Sequence, Tuple, Union

from trigkit.func.errors import IndeterminateError
from trigkit.func.types import enforce_types_object

# A Gaussian-integer factor list: ordered (x_k, y_k) pairs
FactorList = Sequence[Tuple[int, int]]


@dataclass(frozen=True)
class GaussianInt:
    """
    An exact x + iy with arbitrary-precision integer parts.

    Attributes:
        re (int): The real part.
        im (int): The imaginary part.
    """
    re: int
    im: int

    def __post_init__(self):
        for name in ('re', 'im'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"GaussianInt.{name} must be an int, got {value!r}")

    @classmethod
    def one(cls) -> 'GaussianInt':
        return cls(1, 0)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> 'GaussianInt':
        return GaussianInt(self.re, -self.im)

    def __add__(self, other: 'GaussianInt') -> 'GaussianInt':
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __mul__(self, other: 'GaussianInt') -> 'GaussianInt':
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def __iter__(self) -> Iterator[int]:
        yield self.re
        yield self.im

    def __str__(self) -> str:
        return f"({self.re}, {self.im})"


class ExtendedRational:
    """
    A reduced fraction of integers plus one unsigned point at infinity.

    Finite values always satisfy ``den > 0`` and ``gcd(|num|, den) == 1``. The infinite value is the pole of
    tan(n*pi/4) at n = 2 (mod 4); every infinite value equals every other one and its num/den carry no meaning.
    """
    @enforce_types_object
    def __init__(self, num: int, den: int = 1):
        """
        Args:
            num (int): The numerator.
            den (int): The denominator. Zero gives the infinite value.

        Raises:
            IndeterminateError: If both num and den are zero.
        """
        if den == 0:
            if num == 0:
                raise IndeterminateError("0/0 has no value on the extended rational line")
            self.is_infinite = True
            self.num = 1
            self.den = 0
            return
        if den < 0:
            num, den = -num, -den
        divisor = math.gcd(num, den)
        self.is_infinite = False
        self.num = num // divisor
        self.den = den // divisor

    @classmethod
    def infinity(cls) -> 'ExtendedRational':
        return cls(1, 0)

    @classmethod
    def from_fraction(cls, value: Fraction) -> 'ExtendedRational':
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("The point at infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __float__(self) -> float:
        if self.is_infinite:
            return math.inf
        return self.num / self.den

    def __eq__(self, other: Union[int, Fraction, 'ExtendedRational']) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = ExtendedRational(other.numerator, other.denominator)
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_infinite:
            return hash(math.inf)
        return hash(Fraction(self.num, self.den))

    def __repr__(self) -> str:
        if self.is_infinite:
            return "ExtendedRational.infinity()"
        return f"ExtendedRational({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def to_json(self) -> Dict[str, Union[bool, int]]:
        if self.is_infinite:
            return {"infinite": True}
        return {"infinite": False, "num": self.num, "den": self.den}
