import pytest
from hypothesis import given, strategies as st

from carlitzkit.fields import FieldTower, FiniteField, factor_prime_power, find_primitive_modulus


def _digits(code, p, k):
    return [(code // p**i) % p for i in range(k)]


def _code(ds, p):
    return sum(int(d) * p**i for i, d in enumerate(ds))


def oracle_mul(F, a, b):
    """Schoolbook product modulo the field modulus, digit lists only."""
    p, k, m = F.p, F.k, F.modulus
    A, B = _digits(a, p, k), _digits(b, p, k)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(A):
        for j, y in enumerate(B):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * m[i]) % p
    return _code(prod[:k], p)


FIELDS = [FiniteField(2, 1), FiniteField(3, 1), FiniteField(2, 2), FiniteField(2, 4), FiniteField(3, 2), FiniteField(5, 2)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_mul_matches_schoolbook(F):
    for a in range(F.size):
        for b in range(F.size):
            assert F.mul(a, b) == oracle_mul(F, a, b)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_inverse_and_frobenius(F):
    for a in range(1, F.size):
        assert F.mul(a, F.inv(a)) == 1
    # x -> x^p is additive
    for a in range(F.size):
        for b in range(F.size):
            assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(st.integers(0, F.size - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a


def test_primitive_modulus_generates():
    for p, k in [(2, 3), (3, 2), (2, 4), (5, 2)]:
        F = FiniteField(p, k, find_primitive_modulus(p, k))
        assert F.order(F.from_digits([0, 1] + [0] * (k - 2))) == p**k - 1


def test_factor_prime_power():
    assert factor_prime_power(4) == (2, 2)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(7) == (7, 1)
    for bad in (6, 12, 1):
        with pytest.raises(ValueError):
            factor_prime_power(bad)


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, (1, 1))
    with pytest.raises(ValueError):
        FiniteField(4, 1)


@pytest.mark.parametrize("q,d", [(2, 2), (3, 2), (4, 2), (2, 3)])
def test_tower_embedding_and_degrees(q, d):
    T = FieldTower.for_q(q, d)
    base = T.base_elements()
    assert len(set(base)) == q
    assert all(T.is_in_base(c) for c in base)
    # embedding is a ring map
    for a in range(q):
        for b in range(q):
            assert T.embed(T.base.mul(a, b)) == T.big.mul(T.embed(a), T.embed(b))
            assert T.embed(T.base.add(a, b)) == T.big.add(T.embed(a), T.embed(b))
    counts = {}
    for x in range(T.big.size):
        counts[T.exact_degree(x)] = counts.get(T.exact_degree(x), 0) + 1
    assert counts.get(1) == q
    assert sum(counts.values()) == q**d


def test_root_of_unity_missing():
    with pytest.raises(ValueError):
        FieldTower.for_q(3).root_of_unity(4)
