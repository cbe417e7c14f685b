import pytest

from qca.qtorus import NotExact, QuantumTorus, bar, divide_exact, inverse_monomial, parse, render, specialize
from qca.scalars import FORMAL, Laurent, SqrtRing


@pytest.fixture
def torus(kron):
    return QuantumTorus(kron.lam)


def test_twisted_product(torus):
    x1, x3 = torus.gen(1), torus.gen(3)
    # X^e X^f = v^{Lambda(e,f)} X^{e+f}, Lambda(e1, e3) = 1
    assert x1 * x3 == torus.monomial((1, 0, 1, 0), Laurent.monomial(1))
    assert x3 * x1 == torus.monomial((1, 0, 1, 0), Laurent.monomial(-1))


def test_nonskew_rejected():
    with pytest.raises(ValueError):
        QuantumTorus([[0, 1], [1, 0]])


def test_inverse_monomial(torus):
    x = torus.monomial((1, -2, 0, 3), Laurent.monomial(2, -1))
    assert x * inverse_monomial(x) == torus.one()
    with pytest.raises(NotExact):
        inverse_monomial(torus.gen(1) + torus.gen(2))


def test_divide_exact_both_sides(torus):
    a = torus.gen(1) + torus.gen(2) * torus.gen(4)
    d = torus.gen(3) + torus.one()
    assert divide_exact(a * d, d, side="right") == a
    assert divide_exact(d * a, d, side="left") == a


def test_divide_not_exact(torus):
    with pytest.raises(NotExact):
        divide_exact(torus.gen(1) + torus.one(), torus.gen(2) + torus.one())


def test_bar_and_specialize(torus):
    x = torus.monomial((1, 0, 0, 0), Laurent.monomial(1)) + torus.gen(2)
    assert bar(bar(x)) == x
    s = specialize(x, 2)
    assert s.ring == SqrtRing(2)


def test_render_parse(torus):
    x = torus.monomial((-1, 2, 1, 0), Laurent.monomial(1) + Laurent.monomial(-1)) - torus.gen(1)
    text = render(x)
    assert text == "-X[(1,0,0,0)] + (v + v^-1)*X[(-1,2,1,0)]"
    assert parse(text, torus, FORMAL) == x
    assert parse("0", torus) == torus.zero()
