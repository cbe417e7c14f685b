from fractions import Fraction

import pytest

from qca.scalars import (FORMAL, Laurent, NotInvertible, SqrtQ, SqrtRing, gaussian_binomial, is_prime,
                         parse_laurent, parse_sqrt, qbinom, render_laurent, render_sqrt)


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_laurent_arithmetic():
    v = Laurent.monomial(1)
    x = v + v.inv()
    assert x * x == Laurent.monomial(2) + Laurent(2) + Laurent.monomial(-2)
    assert (x * x).divexact(x) == x
    assert x.bar() == x
    assert v.bar() == v.inv()


def test_laurent_non_unit():
    with pytest.raises(NotInvertible):
        (Laurent.monomial(1) + Laurent(1)).inv()


def test_sqrt_field():
    s = SqrtQ(2, 0, 1)
    assert s * s == SqrtQ(2, 2)
    assert SqrtQ(2, 1).shift(3) == SqrtQ(2, 0, 2)  # v^3 = 2 sqrt 2
    assert SqrtQ(2, 1).shift(-2) == SqrtQ(2, Fraction(1, 2))
    x = SqrtQ(3, 1, 1)
    assert x * x.inv() == SqrtQ(3, 1)


def test_specialize_v_plus_inverse():
    x = Laurent.monomial(1) + Laurent.monomial(-1)
    assert x.ev(2) == SqrtQ(2, 0, Fraction(3, 2))


def test_qbinom_and_gaussian():
    assert qbinom(2, 1, FORMAL.vpow(1)) == Laurent.monomial(1) + Laurent.monomial(-1)
    assert [gaussian_binomial(4, k, 2) for k in range(5)] == [1, 15, 35, 15, 1]
    assert gaussian_binomial(3, 1, 3) == 13


def test_render_parse_roundtrip():
    x = Laurent.monomial(3, 2) - Laurent.monomial(-1)
    assert render_laurent(x) == "2*v^3 - v^-1"
    assert parse_laurent(render_laurent(x)) == x
    y = SqrtQ(3, Fraction(1, 2), 3)
    assert render_sqrt(y) == "1/2 + 3*s"
    assert parse_sqrt(render_sqrt(y), 3) == y


def test_ring_descriptors():
    r = SqrtRing(5)
    assert r.vpow(2, 3) == SqrtQ(5, 15)
    assert FORMAL.vpow(2, 3) == Laurent.monomial(2, 3)
    with pytest.raises(ValueError):
        SqrtRing(4)
