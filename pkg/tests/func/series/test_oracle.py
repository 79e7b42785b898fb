import math

import numpy as np
import pytest

from trigkit.func.errors import DomainError, PoleError
from trigkit.func.exact.core import gauss_pow
from trigkit.func.exact.objects import GaussianInt
from trigkit.func.series import closed_form, oracle
from trigkit.func.verify.engine import pole_distance, relative_error
from trigkit.func.verify.objects import TheoremId


def _guarded_angles(theorem, n_max, count, guard=1e-3, seed=7):
    """Seeded (n, x) pairs that keep clear of the identity's poles."""
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        n = int(rng.integers(1, n_max + 1))
        x = float(rng.uniform(0.0, 2 * math.pi))
        if pole_distance(theorem, n, x) >= guard:
            points.append((n, x))
    return points


# Test the binomial expansion at the worked values
def test_binom_series_pair_examples():
    assert oracle.binom_series_pair(1, 1, 3) == (-2, 2)
    assert oracle.binom_series_pair(2, 1, 2) == (3, 4)
    assert oracle.binom_series_pair(5, 0, 0) == (1, 0)
    assert oracle.binom_series_pair(0, 3, 2) == (-9, 0)


# Test the exact binomial expansion over the whole small grid
def test_binom_series_pair_grid():
    for x in range(-5, 6):
        for y in range(-5, 6):
            if (x, y) == (0, 0):
                continue
            for n in range(13):
                cos_sum, sin_sum = oracle.binom_series_pair(x, y, n)
                assert (cos_sum, sin_sum) == tuple(gauss_pow(GaussianInt(x, y), n))
                assert cos_sum * cos_sum + sin_sum * sin_sum == (x * x + y * y) ** n


# Test that float bases are refused by the exact expansion
def test_binom_series_pair_rejects_floats():
    with pytest.raises(TypeError):
        oracle.binom_series_pair(1.0, 1, 2)
    with pytest.raises(DomainError):
        oracle.binom_series_pair(1, 1, -2)


# Test the sine-cosine square sum at the worked values
def test_sin_cos_square_sum():
    assert oracle.sin_cos_square_sum(1, 0.8) == pytest.approx(1.0, rel=1e-15)
    assert oracle.sin_cos_square_sum(5, 0.0) == 25.0
    assert oracle.sin_cos_square_sum(2, math.pi / 2) == pytest.approx(2.0, rel=1e-12)
    assert oracle.sin_cos_square_sum(0, 1.0) == 0.0


# Test the partial cosine sum at the worked values
def test_cos_partial_sum():
    assert oracle.cos_partial_sum(2, math.pi / 3) == pytest.approx(1.0, abs=1e-12)
    assert oracle.cos_partial_sum(4, 0.0) == 9.0
    assert oracle.cos_partial_sum(0, 1.3) == 1.0


# Test the half-angle tangent sum and its terms
def test_tan_half_sum():
    assert oracle.tan_half_sum(1, math.pi / 2) == pytest.approx(0.5, rel=1e-12)
    assert oracle.tan_half_sum(2, math.pi / 2) == pytest.approx(closed_form.tan_half_rhs(2, math.pi / 2), rel=1e-12)
    assert oracle.tan_half_sum(3, 0.0) == 0.0
    assert oracle.tan_half_terms(2, 1.0) == [math.tan(0.5) / 2, math.tan(0.25) / 4]


# Test that tan(x/2**k) poles are refused with the term named
def test_tan_half_sum_pole():
    with pytest.raises(PoleError) as info:
        oracle.tan_half_sum(1, math.pi)
    assert info.value.label == 'tan(x/2^1)'


# Test sums deep enough that the later terms underflow to zero
def test_tan_half_sum_large_n():
    terms = oracle.tan_half_terms(1100, 1.0)
    assert len(terms) == 1100
    assert terms[-1] == 0.0
    assert oracle.tan_half_sum(1100, 1.0) == pytest.approx(closed_form.tan_half_rhs(1100, 1.0), rel=1e-12)
    assert oracle.tan_half_sum(1100, 1.0) == pytest.approx(1 - 1 / math.tan(1.0), rel=1e-12)


# Test the tangent pair and triple sums at the worked values
def test_tangent_product_sums():
    assert oracle.tan_pair_sum(1, math.pi / 6) == pytest.approx(1.0, rel=1e-12)
    assert oracle.tan_pair_sum(3, 0.0) == 0.0
    assert oracle.tan_pair_sum(2, 0.4) == pytest.approx(
        math.tan(0.4) * math.tan(0.8) + math.tan(0.8) * math.tan(1.2), rel=1e-12)
    assert oracle.tan_triple_sum(1, math.pi / 6) == pytest.approx(1.0, rel=1e-12)
    assert oracle.tan_partial_sum(2, math.pi / 8) == pytest.approx(math.tan(math.pi / 8) + 1.0, rel=1e-12)


# Test that a tan(kx) pole is refused
def test_tan_pair_sum_pole():
    with pytest.raises(PoleError) as info:
        oracle.tan_pair_sum(1, math.pi / 4)
    assert info.value.label == 'tan(2x)'


# Test that consecutive half-angle sums differ by one term on both sides
def test_tan_half_sum_increments():
    x = 1.1
    for n in range(2, 20):
        term = oracle.tan_half_terms(n, x)[-1]
        assert oracle.tan_half_sum(n, x) - oracle.tan_half_sum(n - 1, x) == pytest.approx(term, rel=1e-9, abs=1e-15)
        assert closed_form.tan_half_rhs(n, x) - closed_form.tan_half_rhs(n - 1, x) == \
            pytest.approx(term, rel=1e-6, abs=1e-13)


# Test that the tangent-pair sum telescopes to tan((n+1)x) - (n+1) tan(x) after multiplying by tan(x)
def test_tan_pair_telescoping():
    for n, x in _guarded_angles(TheoremId.T2_5, 16, 100):
        lhs = oracle.tan_pair_telescoped_sum(n, x, pole_guard=1e-3)
        rhs = closed_form.tan_pair_telescoped_rhs(n, x, pole_guard=1e-3)
        assert relative_error(lhs, rhs) <= 1e-9


# Test that the triple sum splits into two consecutive pair sums
def test_tan_triple_splits_into_pairs():
    for n, x in _guarded_angles(TheoremId.T2_6, 16, 100, seed=11):
        triple = oracle.tan_triple_sum(n, x, pole_guard=1e-3)
        pairs = oracle.tan_pair_sum(n, x, pole_guard=1e-3) + oracle.tan_pair_sum(n - 1, x, pole_guard=1e-3)
        assert abs(triple - pairs) <= 1e-9 * max(1.0, abs(triple))


# Test the derivative of the partial tangent sum against its tan**2 form
def test_tan_partial_derivative():
    for n, x in _guarded_angles(TheoremId.T2_5, 12, 50, seed=3):
        lhs = oracle.tan_partial_derivative(n, x, pole_guard=1e-3)
        rhs = closed_form.tan_partial_derivative_rhs(n, x, pole_guard=1e-3)
        assert relative_error(lhs, rhs) <= 1e-9


# Test the n = 2 case of the tangent-pair identity in its expanded form
def test_tan_pair_two_terms():
    x = 0.3
    lhs = oracle.tan_pair_sum(2, x)
    expanded = math.tan(3 * x) / math.tan(x) - 3
    assert lhs == pytest.approx(expanded, rel=1e-12)


if __name__ == "__main__":
    pytest.main()
