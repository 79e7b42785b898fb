import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigkit.func.errors import DomainError, MagnitudeOverflowError, PoleError
from trigkit.func.exact.core import gauss_pow, gauss_product
from trigkit.func.exact.objects import GaussianInt
from trigkit.func.series import closed_form, oracle

small_ints = st.integers(-20, 20)


# Test De Moivre's closed form at the worked values
def test_demoivre_examples():
    assert tuple(closed_form.demoivre_closed(2, 1, 2)) == pytest.approx((3.0, 4.0), rel=1e-12)
    assert tuple(closed_form.demoivre_closed(1, 1, 3)) == pytest.approx((-2.0, 2.0), rel=1e-12)
    assert tuple(closed_form.demoivre_closed(-3, 7, 0)) == (1.0, 0.0)


# Test that the closed form uses the principal argument in every quadrant
@given(small_ints, small_ints, st.integers(0, 12))
def test_demoivre_matches_exact_power(x, y, n):
    if (x, y) == (0, 0):
        return
    exact = gauss_pow(GaussianInt(x, y), n)
    approx = closed_form.demoivre_closed(x, y, n)
    scale = math.hypot(x, y) ** n
    assert abs(approx.cos_part - exact.re) <= 1e-9 * scale
    assert abs(approx.sin_part - exact.im) <= 1e-9 * scale


# Test the domain and overflow refusals
def test_demoivre_refusals():
    with pytest.raises(DomainError):
        closed_form.demoivre_closed(0, 0, 3)
    with pytest.raises(DomainError):
        closed_form.demoivre_closed(1, 1, -1)
    with pytest.raises(MagnitudeOverflowError):
        closed_form.demoivre_closed(10.0, 0.0, 400)


# Test the sum of squared parts
def test_sum_squares_closed():
    assert closed_form.sum_squares_closed(1, 1, 8) == pytest.approx(256.0)
    assert closed_form.sum_squares_closed(3, 4, 2) == pytest.approx(625.0)


# Test that the squared De Moivre parts sum to the closed modulus power
@given(small_ints, small_ints, st.integers(0, 12))
def test_demoivre_parts_square_to_sum_squares(x, y, n):
    if (x, y) == (0, 0):
        return
    pair = closed_form.demoivre_closed(x, y, n)
    total = closed_form.sum_squares_closed(x, y, n)
    assert pair.cos_part ** 2 + pair.sin_part ** 2 == pytest.approx(total, rel=1e-9)


# Test that the zeroth power is 1 whatever the base
@pytest.mark.parametrize("x, y", [(-3, 7), (0, 5), (4, 0), (-1, -1)])
def test_sum_squares_zeroth_power(x, y):
    assert closed_form.sum_squares_closed(x, y, 0) == 1.0
    pair = closed_form.demoivre_closed(x, y, 0)
    assert pair.cos_part ** 2 + pair.sin_part ** 2 == 1.0


# Test that the float corollary side matches the exact alternating sums
def test_corollary_closed_matches_exact():
    for n in range(64):
        exact = gauss_pow(GaussianInt(1, 1), n)
        approx = closed_form.corollary_closed(n)
        scale = 2.0 ** (n / 2)
        assert abs(approx.cos_part - exact.re) <= 1e-12 * scale
        assert abs(approx.sin_part - exact.im) <= 1e-12 * scale


# Test the modulus-argument product at the worked values
def test_gauss_product_closed_examples():
    assert tuple(closed_form.gauss_product_closed([(1, 1), (2, 1), (3, 1)])) == pytest.approx((0.0, 10.0), abs=1e-9)
    assert tuple(closed_form.gauss_product_closed([(3, 4)])) == pytest.approx((3.0, 4.0), abs=1e-12)
    assert tuple(closed_form.gauss_product_closed([(1, 1), (1, -1)])) == pytest.approx((2.0, 0.0), abs=1e-12)
    assert tuple(closed_form.gauss_product_closed([(-1, 0)])) == pytest.approx((-1.0, 0.0), abs=1e-12)


# Test that the unit direction survives products whose modulus overflows
def test_gauss_product_direction():
    assert tuple(closed_form.gauss_product_direction([(1, 1), (2, 1), (3, 1)])) == pytest.approx((0.0, 1.0), abs=1e-12)
    assert tuple(closed_form.gauss_product_direction([])) == (1.0, 0.0)
    # (9 + 9i)**400 = 162**200, a positive real far past the double range
    assert tuple(closed_form.gauss_product_direction([(9, 9)] * 400)) == pytest.approx((1.0, 0.0), abs=1e-9)
    with pytest.raises(MagnitudeOverflowError):
        closed_form.gauss_product_closed([(9, 9)] * 400)


# Test that x = 0 factors need the principal argument and (0, 0) is never accepted
def test_gauss_product_closed_zero_real_part():
    with pytest.raises(DomainError):
        closed_form.gauss_product_closed([(0, 1)])
    assert tuple(closed_form.gauss_product_closed([(0, 1)], principal_argument=True)) == \
        pytest.approx((0.0, 1.0), abs=1e-12)
    with pytest.raises(DomainError):
        closed_form.gauss_product_closed([(0, 0)], principal_argument=True)


# Test that the closed product is within the modulus-scaled integrality bound of the exact one
@given(st.lists(st.tuples(st.integers(-9, 9).filter(bool), st.integers(-9, 9)), min_size=1, max_size=8))
def test_gauss_product_closed_near_exact(factors):
    exact = gauss_product(factors)
    approx = closed_form.gauss_product_closed(factors)
    modulus = closed_form.factor_modulus(factors)
    assert abs(approx.cos_part - exact.re) <= 1e-6 * modulus
    assert abs(approx.sin_part - exact.im) <= 1e-6 * modulus


# Test the squared Dirichlet kernel at the worked values and its limit at zero
def test_dirichlet_rhs():
    assert closed_form.dirichlet_rhs(1, 0.7) == 1.0
    assert closed_form.dirichlet_rhs(2, math.pi / 2) == pytest.approx(2.0, rel=1e-12)
    assert closed_form.dirichlet_rhs(3, 1e-6, pole_guard=0.0) == pytest.approx(9.0, rel=1e-9)
    assert closed_form.dirichlet_rhs(7, 1e-8, pole_guard=0.0) == pytest.approx(49.0, rel=1e-9)


# Test the Dirichlet pole at multiples of 2*pi
def test_dirichlet_rhs_poles():
    with pytest.raises(PoleError):
        closed_form.dirichlet_rhs(3, 0.0, pole_guard=0.0)
    with pytest.raises(PoleError):
        closed_form.dirichlet_rhs(3, 1e-5)
    with pytest.raises(PoleError):
        closed_form.dirichlet_rhs(2, 2 * math.pi)
    assert closed_form.dirichlet_rhs(2, math.pi) == pytest.approx(0.0, abs=1e-24)


# Test the partial cosine closed form
def test_cos_partial_rhs():
    assert closed_form.cos_partial_rhs(1, 0.9) == pytest.approx(1 + 2 * math.cos(0.9), rel=1e-12)
    assert closed_form.cos_partial_rhs(2, math.pi / 3) == pytest.approx(1.0, rel=1e-12)
    assert closed_form.cos_partial_rhs(0, 2.0) == pytest.approx(1.0, rel=1e-15)
    for m in range(6):
        assert closed_form.cos_partial_rhs(m, 1e-6, pole_guard=0.0) == pytest.approx(2 * m + 1, rel=1e-9)


# Test the half-angle tangent closed form
def test_tan_half_rhs():
    assert closed_form.tan_half_rhs(1, math.pi / 2) == pytest.approx(0.5, abs=1e-12)
    assert closed_form.tan_half_rhs(2, math.pi / 2) == pytest.approx((1 + math.sqrt(2)) / 4, rel=1e-12)


# Test the cot(x) and cot(x/2**n) poles
def test_tan_half_rhs_poles():
    with pytest.raises(PoleError) as info:
        closed_form.tan_half_rhs(1, math.pi)
    assert info.value.label == 'cot(x)'
    with pytest.raises(PoleError):
        closed_form.tan_half_rhs(2, 2 * math.pi)


# Test halving depths where x/2**n underflows and 2**n * pi overflows
def test_tan_half_rhs_large_n():
    limit = 1 - 1 / math.tan(1.0)
    assert closed_form.tan_half_rhs(60, 1.0) == pytest.approx(limit, rel=1e-12)
    assert closed_form.tan_half_rhs(1100, 1.0) == pytest.approx(limit, rel=1e-12)
    assert closed_form.tan_half_rhs(1100, -2.5) == pytest.approx(1 / -2.5 - 1 / math.tan(-2.5), rel=1e-12)
    with pytest.raises(PoleError):
        closed_form.tan_half_rhs(1100, 0.0)


# Test the tangent-pair closed form
def test_tan_pair_rhs():
    assert closed_form.tan_pair_rhs(1, math.pi / 6) == pytest.approx(1.0, rel=1e-12)
    assert closed_form.tan_pair_rhs(2, math.pi / 5) == pytest.approx(oracle.tan_pair_sum(2, math.pi / 5), rel=1e-9)
    with pytest.raises(PoleError) as info:
        closed_form.tan_pair_rhs(1, math.pi / 4)
    assert info.value.label == 'tan(2x)'
    with pytest.raises(PoleError):
        closed_form.tan_pair_rhs(1, math.pi)


# Test the tangent-triple closed form
def test_tan_triple_rhs():
    assert closed_form.tan_triple_rhs(1, math.pi / 6) == pytest.approx(1.0, rel=1e-12)
    assert closed_form.tan_triple_rhs(3, 0.3) == pytest.approx(oracle.tan_triple_sum(3, 0.3), rel=1e-9)


# Test the telescoped tangent sum and the derivative of the partial tangent sum
def test_tan_supplements():
    assert closed_form.tan_pair_telescoped_rhs(1, 0.4) == pytest.approx(
        oracle.tan_pair_telescoped_sum(1, 0.4), rel=1e-12)
    assert closed_form.tan_partial_derivative_rhs(3, 0.2) == pytest.approx(
        oracle.tan_partial_derivative(3, 0.2), rel=1e-12)


# Test that negative n is refused by every angular evaluator
@pytest.mark.parametrize("evaluator", [closed_form.dirichlet_rhs, closed_form.cos_partial_rhs,
                                       closed_form.tan_half_rhs, closed_form.tan_pair_rhs,
                                       closed_form.tan_triple_rhs])
def test_negative_n(evaluator):
    with pytest.raises(DomainError):
        evaluator(-1, 1.0)


if __name__ == "__main__":
    pytest.main()
