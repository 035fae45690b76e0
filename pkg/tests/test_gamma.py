import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from carlitzkit import gamma_numerics as gn

mpmath.mp.dps = 30

POINTS = [2.3 + 0.7j, 1.7, 0.8 + 0.3j, 3.1 - 1.2j, 0.45 + 2j, -2.5 + 0.5j, 12.5 - 3j]


def rel(a, b):
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


@pytest.mark.parametrize("z", POINTS)
def test_gamma_digamma_vs_mpmath(z):
    assert rel(gn.gamma(z), mpmath.gamma(z)) < 1e-13
    assert rel(gn.digamma(z), mpmath.digamma(z)) < 1e-13


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("z", POINTS[:5])
def test_polygamma_vs_mpmath(n, z):
    assert rel(gn.polygamma(n, z), mpmath.polygamma(n, z)) < 1e-11


@pytest.mark.parametrize("z,s", [(2, 0.5), (3.5, 1.2), (1.5 + 0.5j, 2.0), (0.5, 0.7 + 0.4j), (-1.5, 2.0)])
def test_hurwitz_vs_mpmath(z, s):
    assert rel(gn.hurwitz_zeta(z, s), mpmath.zeta(z, s)) < 1e-12


def test_regularised_hurwitz_at_one_is_minus_digamma():
    for s in (0.7, 2.5, 1 + 1j):
        assert rel(gn.hurwitz_zeta_regular(1, s), -gn.digamma(s)) < 1e-12


@pytest.mark.parametrize("s", [1.3, 0.8 + 0.3j])
def test_gamma_derivatives_vs_mpmath(s):
    G = gn.gamma_derivatives(s, 4)
    for n, g in enumerate(G):
        assert rel(g, mpmath.diff(mpmath.gamma, s, n)) < 1e-10


def test_bernoulli_exact():
    assert gn.bernoulli(1) == Fraction(-1, 2)
    assert gn.bernoulli(12) == Fraction(-691, 2730)
    assert gn.bernoulli(7) == 0


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=8, allow_nan=False, allow_infinity=False))
def test_recurrence_property(z):
    if abs(z - round(z.real)) < 1e-3 and round(z.real) <= 1:
        return
    a, b = gn.gamma(z + 1), z * gn.gamma(z)
    if abs(a) > 1e200:
        return
    assert abs(a - b) / (abs(a) + abs(b) + 1e-300) < 1e-11


@given(st.floats(0.05, 0.95), st.floats(-2, 2))
def test_reflection_property(x, y):
    z = complex(x, y)
    assert rel(gn.gamma(z) * gn.gamma(1 - z), math.pi / cmath.sin(math.pi * z)) < 1e-11


def test_poles_raise():
    for f in (gn.gamma, gn.digamma):
        with pytest.raises(gn.PoleError):
            f(-3)
    with pytest.raises(gn.PoleError):
        gn.hurwitz_zeta(1, 2.0)
    with pytest.raises(gn.DomainError):
        gn.polygamma(-1, 2.0)


def test_divergent_taylor_detected():
    t = gn.TruncatedTaylor([1.0] * 10)
    with pytest.raises(gn.DivergenceError):
        t.evaluate(2.0)
    v, tail = gn.TruncatedTaylor([1.0 / math.factorial(k) for k in range(20)]).evaluate(0.5)
    assert abs(v - math.exp(0.5)) < 1e-15 and tail < 1e-15


def test_phi_of_s_on_gamma_derivative_sign():
    # phi(s) Gamma' = -Gamma in the OLD convention; the displayed +n would fail
    s = 1.7 + 0.2j
    G = gn.gamma_derivatives(s, 2)
    lhs = gn.phi_apply([0, 1], lambda z: gn.gamma_derivatives(z, 1)[1], s)
    assert rel(lhs, -G[0]) < 1e-12
    assert rel(lhs, G[0]) > 0.5


def test_gamma_is_phi_s_torsion():
    s = 2.3 + 0.7j
    assert abs(gn.phi_apply([0, 1], gn.gamma, s)) < 1e-12 * abs(gn.gamma(s))
    # the single root +i is not enough for s^2 + 1: Gamma(s - i) alone is not killed by phi(s)
    g = lambda z: gn.gamma(z - 1j)
    assert abs(gn.phi_apply([1, 0, 1], g, s)) < 1e-10 * abs(g(s))
    assert abs(gn.phi_apply([0, 1], g, s)) > 1e-3 * abs(g(s))


@pytest.mark.parametrize("fn", [
    lambda: gn.gamma_torsion_check(3),
    lambda: gn.akhiezer_gamma_expansion(0.8, 0.3),
    gn.kernel_basis_checks,
    gn.l_x_checks,
    gn.mellin_shift_check,
    gn.hurwitz_identities,
    gn.srivastava_identity,
    gn.classical_functional_relations,
    gn.semi_norm_audit,
])
def test_check_suites_pass(fn):
    recs = fn()
    assert recs and all(r.ok for r in recs), [r.name for r in recs if not r.ok]


def test_akhiezer_expansion_outside_disc_rejected():
    # Gamma(s - t) has a pole at t = s; the expansion about t = 0 cannot reach it
    with pytest.raises(gn.DomainError):
        gn.akhiezer_gamma_expansion(0.8, 1.5)
