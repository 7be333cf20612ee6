import random
from fractions import Fraction

import pytest

from fmk.ratfunc import LAM, RatFunc, as_fraction, poly_rational_roots, subs_scalar


def test_generator_arithmetic():
    f = (LAM + 1) * (LAM - 1)
    assert f == LAM * LAM - 1
    assert f.subs(3) == 8
    assert (f / (LAM - 1)) == LAM + 1  # exact cancellation


def test_mixing_with_fractions_and_ints():
    f = Fraction(1, 2) + LAM
    g = LAM + Fraction(1, 2)
    assert f == g
    assert 2 * LAM - LAM == LAM
    assert (1 - LAM) * (1 + LAM) == 1 - LAM * LAM
    assert Fraction(3, 4) / (LAM + 1) == RatFunc(Fraction(3, 4)) / (LAM + 1)


def test_constant_detection():
    c = (LAM + 2) - LAM
    assert c.is_constant() and c.constant_value() == 2
    assert not LAM.is_constant()
    with pytest.raises(ValueError):
        LAM.constant_value()


def test_zero_behaviour():
    z = LAM - LAM
    assert not z and z == 0
    with pytest.raises(ZeroDivisionError):
        (LAM + 1) / z


def test_subs_and_pole():
    f = (LAM + 2) / (LAM - 1)
    assert f.subs(3) == Fraction(5, 2)
    with pytest.raises(ZeroDivisionError):
        f.subs(1)


def test_numerator_roots():
    f = (LAM - 1) * (2 * LAM + 3)
    assert f.numerator_roots() == [Fraction(-3, 2), Fraction(1)]
    assert LAM.numerator_roots() == [Fraction(0)]
    g = LAM * LAM + 1
    assert g.numerator_roots() == []


def test_poly_rational_roots_with_zero_root():
    # lam^2 (lam - 1/2)
    coeffs = (Fraction(0), Fraction(0), Fraction(-1, 2), Fraction(1))
    assert poly_rational_roots(coeffs) == [Fraction(0), Fraction(1, 2)]


def test_field_axioms_randomized():
    rng = random.Random(99)

    def rand():
        num = tuple(Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3)))
        den = tuple(Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3)))
        try:
            return RatFunc(num, den)
        except ZeroDivisionError:
            return RatFunc(1)

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert a - a == 0
        if b != 0:
            assert (a / b) * b == a


def test_scalar_helpers():
    assert as_fraction(RatFunc(Fraction(2, 3))) == Fraction(2, 3)
    assert subs_scalar(Fraction(1, 2), 7) == Fraction(1, 2)
    assert subs_scalar(LAM + 1, 7) == 8
