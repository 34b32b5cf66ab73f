import pytest

from surfacebraid.laurent import (
    KINK_POS,
    LOOP,
    ONE,
    ZERO,
    LaurentPolynomial,
    unit_power,
)


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({3: 1, 0: 0})
    assert p.pairs() == ((3, 1),)


def test_addition_cancels():
    p = LaurentPolynomial({1: 2, -1: 3})
    q = LaurentPolynomial({1: -2})
    assert (p + q).pairs() == ((-1, 3),)
    assert p + q + LaurentPolynomial({-1: -3}) == ZERO


def test_multiplication():
    p = LaurentPolynomial({1: 1, -1: 1})
    assert (p * p).pairs() == ((-2, 1), (0, 2), (2, 1))
    assert (p * 0) == ZERO
    assert p * ONE == p


def test_power():
    assert LOOP ** 0 == ONE
    assert LOOP ** 2 == LOOP * LOOP
    with pytest.raises(ValueError):
        LOOP ** -1


def test_int_comparison():
    assert ONE == 1
    assert LaurentPolynomial({0: -4}) == -4
    assert LOOP != 1


def test_unit_power_negative():
    assert unit_power(KINK_POS, -2) == LaurentPolynomial({-6: 1})
    assert unit_power(KINK_POS, 3) == LaurentPolynomial({9: -1})
    with pytest.raises(ValueError):
        unit_power(LOOP, 2)


def test_str():
    assert str(LOOP) in ("-A^-2 - A^2", "-A^2 - A^-2")
    assert str(ZERO) == "0"


def test_hashable():
    assert len({LOOP, LOOP * ONE, ONE}) == 2
