import pytest
from hypothesis import given, strategies as st

from carlitzkit.fields import FieldTower
from carlitzkit.ratfunc import Poly, RationalFn
from carlitzkit.skew import (
    FrobeniusRing,
    ShiftRing,
    SkewOperator,
    apply,
    right_divide,
    skew_algebra_check,
    skew_mul,
)

S = ShiftRing()
s = RationalFn.variable()


def op(coeffs):
    return SkewOperator(S, [RationalFn(Poly(c)) for c in coeffs])


coeff = st.lists(st.integers(-3, 3), min_size=1, max_size=3)
ops = st.lists(coeff, min_size=1, max_size=3).map(op)


def test_commutation_rule():
    # tau * s = (s + 1) * tau
    tau = SkewOperator.tau_monomial(S)
    lhs = skew_mul(tau, SkewOperator.scalar(S, s))
    assert lhs.agrees(SkewOperator(S, [S.zero(), s + RationalFn.const(1)])).ok


@given(ops, ops, ops)
def test_associative_over_shift_field(a, b, c):
    assert skew_mul(skew_mul(a, b), c).agrees(skew_mul(a, skew_mul(b, c))).ok


@given(ops, ops, coeff)
def test_apply_is_an_action(a, b, z):
    x = RationalFn(Poly(z))
    assert apply(skew_mul(a, b), x) == apply(a, apply(b, x))


@given(ops, ops)
def test_right_division_reconstructs(a, d):
    if d.degree < 0:
        return
    Q, R = right_divide(a, d)
    assert R.degree < d.degree
    assert (skew_mul(Q, d) + R).agrees(a).ok


def test_frobenius_twist():
    F = FieldTower.for_q(3).big
    ring = FrobeniusRing(F, 3)
    th = ring.theta()
    tau = SkewOperator.tau_monomial(ring)
    prod = skew_mul(tau, SkewOperator.scalar(ring, th))
    assert prod.coefficient(1) == th * th * th


@pytest.mark.parametrize("backend", ["shift", "frobenius", "radical", "qdilation"])
def test_random_triples_small(backend):
    res = skew_algebra_check(backend, n_triples=20, seed=7)
    assert res["failures"] == {"associativity": 0, "apply_composition": 0, "right_division": 0}
    assert res["triples"] == 20


def test_unknown_backend():
    with pytest.raises((ValueError, KeyError)):
        skew_algebra_check("nope", 1)
