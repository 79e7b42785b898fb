import math
from fractions import Fraction

import pytest

from trigkit.func.errors import IndeterminateError
from trigkit.func.exact.core import tan_quarter
from trigkit.func.exact.objects import ExtendedRational, GaussianInt


# Test that finite values are stored reduced with a positive denominator
def test_extended_rational_reduces():
    value = ExtendedRational(2, -4)
    assert (value.num, value.den) == (-1, 2)
    assert ExtendedRational(0, 5) == ExtendedRational(0, 1)
    assert ExtendedRational(6, 3) == 2


# Test that every infinite value equals every other one and no finite value
def test_extended_rational_infinity():
    assert ExtendedRational(5, 0) == ExtendedRational(-3, 0)
    assert ExtendedRational.infinity() != ExtendedRational(1)
    assert float(ExtendedRational.infinity()) == math.inf
    assert str(ExtendedRational.infinity()) == "inf"


# Test that equal values hash alike, so tangent values collapse in sets and dicts
def test_extended_rational_hashing():
    values = {tan_quarter(n) for n in range(16)}
    assert len(values) == 4
    assert ExtendedRational(5, 0) in values
    assert {ExtendedRational(4, 2): 'two'}[2] == 'two'
    assert hash(ExtendedRational(-2, 4)) == hash(Fraction(-1, 2))


# Test the float conversions of finite values
def test_extended_rational_float():
    assert float(ExtendedRational(-3, 4)) == -0.75
    assert float(ExtendedRational(7)) == 7.0
    assert sorted(float(value) for value in {tan_quarter(n) for n in range(4)}) == [-1.0, 0.0, 1.0, math.inf]


# Test that 0/0 is refused
def test_extended_rational_indeterminate():
    with pytest.raises(IndeterminateError):
        ExtendedRational(0, 0)


# Test the text and JSON renderings
def test_extended_rational_rendering():
    assert str(ExtendedRational(-1)) == "-1"
    assert str(ExtendedRational(3, 6)) == "1/2"
    assert ExtendedRational(3, 6).to_json() == {"infinite": False, "num": 1, "den": 2}
    assert ExtendedRational(1, 0).to_json() == {"infinite": True}


# Test the Fraction conversions
def test_extended_rational_fraction_round_trip():
    assert ExtendedRational.from_fraction(Fraction(-7, 21)).as_fraction() == Fraction(-1, 3)
    with pytest.raises(ValueError):
        ExtendedRational.infinity().as_fraction()


# Test that the constructor enforces integer arguments
def test_extended_rational_type_enforcement():
    with pytest.raises(TypeError):
        ExtendedRational(1.5)
    with pytest.raises(TypeError):
        ExtendedRational(1, "2")


# Test Gaussian integer arithmetic helpers
def test_gaussian_int_basics():
    z = GaussianInt(3, -4)
    assert z.norm() == 25
    assert z.conjugate() == GaussianInt(3, 4)
    assert z * z.conjugate() == GaussianInt(25, 0)
    assert z + GaussianInt(1, 1) == GaussianInt(4, -3)
    assert tuple(z) == (3, -4)


# Test that non-integer parts are refused
def test_gaussian_int_rejects_floats():
    with pytest.raises(TypeError):
        GaussianInt(1.0, 2)


if __name__ == "__main__":
    pytest.main()
