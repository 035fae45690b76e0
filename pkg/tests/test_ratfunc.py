from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from carlitzkit.ratfunc import Poly, RationalFn

small = st.integers(-4, 4)
polys = st.lists(small, min_size=1, max_size=4).map(Poly)
POINTS = [Fraction(7, 3), Fraction(-5, 2), Fraction(11)]


def nonzero_at_points(p):
    return all(p(z) != 0 for z in POINTS)


@given(polys, polys, polys, polys)
def test_field_ops_agree_with_pointwise_evaluation(a, b, c, d):
    if not (b and d and nonzero_at_points(b) and nonzero_at_points(d)):
        return
    x, y = RationalFn(a, b), RationalFn(c, d)
    for z in POINTS:
        xv, yv = Fraction(a(z)) / b(z), Fraction(c(z)) / d(z)
        assert (x + y)(z) == xv + yv
        assert (x * y)(z) == xv * yv
        assert (x - y)(z) == xv - yv
        if c(z) != 0 and c:
            assert (x / y)(z) == xv / yv


@given(polys, polys)
def test_canonical_form(a, b):
    if not b:
        return
    r = RationalFn(a, b)
    assert r.den.lc() == 1
    assert r.num.gcd(r.den).degree == 0 or not r.num


def test_constant_denominator_is_normalised():
    # regression: fast paths once kept a non-monic constant denominator
    r = RationalFn(Poly((4,)), Poly((2,)))
    assert r == RationalFn.const(2)
    assert str(r) == "2"
    m = RationalFn(Poly((0, 0, 3)), Poly((0, 6)))
    assert m == RationalFn(Poly((0, Fraction(1, 2))))


@given(polys, st.integers(-3, 3))
def test_shift_is_substitution(a, n):
    r = RationalFn(a, Poly((1, 0, 1)))
    for z in POINTS:
        assert r.shift(n)(z) == r(z + n)


def test_divmod_and_gcd():
    s = Poly.x()
    f = (s - Poly.const(1)) * (s + Poly.const(2))
    g = (s - Poly.const(1)) * (s * s + Poly.const(1))
    assert f.gcd(g) == (s - Poly.const(1))
    qt, rm = g.divmod(f)
    assert qt * f + rm == g and rm.degree < f.degree


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFn(Poly((1,)), Poly(()))
    with pytest.raises(ZeroDivisionError):
        RationalFn.const(1) / RationalFn.const(0)
