import pytest
from hypothesis import given, strategies as st

from carlitzkit.fields import FiniteField
from carlitzkit.laurent import LaurentSeries, PrecisionError, RadicalScaled

F3 = FiniteField(3)
F4 = FiniteField(2, 2)


def terms_strategy(F, lo=-4, hi=6):
    return st.dictionaries(st.integers(lo, hi), st.integers(1, F.size - 1), max_size=6)


def oracle_mul(F, x: dict, y: dict) -> dict:
    out: dict = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            out[e1 + e2] = F.add(out.get(e1 + e2, 0), F.mul(c1, c2))
    return {e: c for e, c in out.items() if c}


@pytest.mark.parametrize("F", [F3, F4], ids=repr)
@given(data=st.data())
def test_exact_product_matches_dict_oracle(F, data):
    x = data.draw(terms_strategy(F))
    y = data.draw(terms_strategy(F))
    got = LaurentSeries.from_terms(F, x) * LaurentSeries.from_terms(F, y)
    assert got.terms() == oracle_mul(F, x, y)


@pytest.mark.parametrize("F", [F3, F4], ids=repr)
@given(data=st.data())
def test_inverse_to_relative_precision(F, data):
    x = data.draw(terms_strategy(F))
    if not x:
        return
    a = LaurentSeries.from_terms(F, x)
    inv = a.inverse(20)
    prod = a * inv
    ag = prod.agrees(LaurentSeries.one(F))
    assert ag.ok and (ag.prec is None or ag.prec >= 20)


@given(data=st.data())
def test_ring_laws(data):
    F = F3
    a, b, c = (LaurentSeries.from_terms(F, data.draw(terms_strategy(F))) for _ in range(3))
    assert (a * (b + c)) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a


def test_frobenius_is_substitution():
    x = LaurentSeries.from_terms(F3, {-2: 1, 0: 2, 3: 1})
    assert x.frobenius(3).terms() == {-6: 1, 0: 2, 9: 1}
    assert x**3 == x.frobenius(3)


def test_precision_is_tracked():
    a = LaurentSeries.from_terms(F3, {0: 1, 1: 1}, prec=5)
    b = LaurentSeries.from_terms(F3, {-2: 1})
    assert (a * b).prec == 3
    assert (a + b).prec == 5
    assert not a.exact


def test_inverse_of_zero_raises():
    with pytest.raises((ZeroDivisionError, PrecisionError)):
        LaurentSeries.zero(F3).inverse(5)


def test_radical_grading_multiplies():
    # rho^(q-1) = -theta
    rho = RadicalScaled(3, 1, LaurentSeries.one(F3))
    sq = rho * rho
    assert sq.e == 0
    assert sq.body == -LaurentSeries.theta(F3)


def test_json_round_trip():
    x = LaurentSeries.from_terms(F4, {-1: 2, 4: 3}, prec=9)
    assert LaurentSeries.from_json(F4, x.to_json()) == x
