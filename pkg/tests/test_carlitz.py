from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from carlitzkit import anderson_thakur as at
from carlitzkit import carlitz as cz
from carlitzkit.fields import FieldTower
from carlitzkit.laurent import LaurentSeries
from carlitzkit.ratfunc import Poly, RationalFn
from carlitzkit.report import PASS
from carlitzkit.skew import ShiftRing, SkewOperator, skew_mul


# -- independent oracle: powers of s - tau with tau c(s) = c(s + 1) tau ------------------


def _pshift(c):
    """c(s + 1) for an integer coefficient list."""
    out = [0] * len(c)
    for i, a in enumerate(c):
        for j in range(i + 1):
            out[j] += a * comb(i, j)
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def old_power_oracle(n):
    """(s - tau)^n as {k: coeff list}."""
    op = {0: [1]}
    for _ in range(n):
        new = {}
        for k, c in op.items():
            new[k] = _padd(new.get(k, []), [0] + c)  # s * c
            new[k + 1] = _padd(new.get(k + 1, []), [-x for x in _pshift(c)])  # -tau * c
        op = new
    return op


@pytest.mark.parametrize("n", range(6))
def test_phi_of_powers_matches_operator_power(n):
    ctx = cz.shift_context()
    got = ctx.phi(ctx.vartheta**n if n else RationalFn.const(1), n + 1)
    want = old_power_oracle(n)
    assert got.degree == n
    for k in range(n + 1):
        assert got.coefficient(k) == RationalFn(Poly(want[k]))


def test_reference_tables_for_s2_s3():
    table = cz.poly_phi_table(3)
    assert [str(c) for c in table[2]] == ["s^2", "-2*s - 1", "1"]
    assert [str(c) for c in table[3]] == ["s^3", "-3*s^2 - 3*s - 1", "3*s + 3", "-1"]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_new_convention_is_frobenius_power(q):
    F = FieldTower.for_q(q).big
    ctx = at.new_context(F, q)
    ring = ctx.ring
    th = ctx.vartheta
    # (theta + tau)^3 expanded by hand with tau c = c^q tau
    tq, tq2 = th.frobenius(q), th.frobenius(q * q)
    want = [th * th * th, th * th + th * tq + tq * tq, th + tq + tq2, ring.one()]
    got = ctx.phi(th * th * th, 4)
    assert got.agrees(SkewOperator(ring, want)).ok
    assert ctx.phi_vartheta().agrees(SkewOperator(ring, [th, ring.one()])).ok


def test_phi_inverse_s_is_plus_one_over_rising():
    # derived by hand: E_2(1/s) = +1/(s(s+1)(s+2)), not the alternating falling form
    res = cz.phi_inverse_s(5)
    assert all("+1/rising" in row["matches"] for row in res["rows"])
    c2 = res["operator"].coefficient(2)
    s = RationalFn.variable()
    assert c2 == RationalFn.const(1) / (s * (s + RationalFn.const(1)) * (s + RationalFn.const(2)))
    assert c2(Fraction(1)) == Fraction(1, 6)


def test_exp_log_over_shift_field():
    ctx = cz.shift_context()
    d, l_ = cz.exp_log_coeffs(ctx, 6)
    assert d == [RationalFn.const((-1) ** n * factorial(n)) for n in range(7)]
    assert l_ == [RationalFn.const(factorial(n)) for n in range(7)]
    recs = cz.exp_log_identities(ctx, 6, [ctx.vartheta**2 + RationalFn.const(1)])
    assert all(r.status == PASS for r in recs)


@pytest.mark.parametrize("q", [2, 3])
def test_exp_coefficients_frozen(q):
    F = FieldTower.for_q(q).big
    d, l_ = cz.exp_log_coeffs(at.new_context(F, q), 2)
    th = LaurentSeries.theta(F)
    assert d[1] == th.frobenius(q) - th
    assert l_[1] == th - th.frobenius(q)
    assert d[2] == (th.frobenius(q * q) - th) * (th.frobenius(q * q) - th.frobenius(q))


def test_leibniz_and_casoratian():
    ctx = cz.shift_context()
    s = ctx.vartheta
    one = RationalFn.const(1)
    assert cz.leibniz_check(ctx, s * s, one / s, 4).status == PASS
    res = cz.casoratian(ctx, [one, s, s * s])
    assert res["identity"].ok
    # E-matrix of 1, s, s^2 is unitriangular up to sign: det 1 in OLD (E_1(s) = 1, E_2(s^2) = 1)
    assert res["det_E"] == one
    assert res["F_n"] == RationalFn.const(2)


def test_periodic_vartheta_rejected():
    ring = ShiftRing()
    with pytest.raises(cz.PeriodicityError):
        cz.CarlitzContext(ring, RationalFn.const(3))


def test_jacobi_theta_exact():
    recs = cz.jacobi_theta_checks(8, 2)
    signed = [r for r in recs if "unsigned" not in r.name]
    assert all(r.status == PASS for r in recs)
    assert [r.name for r in signed] == ["phi(x) x_1 = 0", "phi(x) x_2 = x_1", "phi(x) x_3 = x_2"]


def test_jacobi_theta_window_too_small():
    with pytest.raises(ValueError):
        cz.jacobi_theta_checks(1, 1)


def test_theta_coefficient_base_case():
    # x_1 = sum qh^(-m(m+1)/2) x^m
    assert cz.theta_coefficient(2, 0) == RationalFn.variable("q") ** -3
    assert cz.theta_coefficient(-1, 0) == RationalFn.const(1, "q")

_small_poly = st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(lambda c: RationalFn(Poly(c)))


@given(_small_poly, _small_poly)
def test_phi_is_multiplicative_and_additive(a, b):
    ctx = cz.shift_context()
    pa, pb = ctx.phi(a, 4), ctx.phi(b, 4)
    assert ctx.phi(a * b, 6).agrees(skew_mul(pa, pb)).ok
    assert ctx.phi(a + b, 4).agrees(pa + pb).ok
