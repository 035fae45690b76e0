"""Finite fields F_{p^k} and the tower F_q -> F_{q^d}.

Elements are encoded as integers ``code = sum(c_i * p**i)`` where ``c_i`` are
the coordinates in the polynomial basis ``1, a, a^2, ...`` modulo the field's
defining polynomial.  Multiplication goes through log/antilog tables built
once per field; tables are never mutated afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "DEFAULT_MODULI",
    "FieldTower",
    "FiniteField",
    "FqElem",
    "find_primitive_modulus",
    "is_prime",
]

# Lexicographically first primitive polynomial (low -> high coefficients) for
# every p^k <= 81 with k >= 2.  Prime fields use the modulus x.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (2, 0, 0, 1, 1),
    (5, 2): (2, 1, 1),
    (7, 2): (3, 1, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % f for f in range(2, int(n**0.5) + 1))


def _mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    r = [0] * (2 * k)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] + x * y) % p
    for deg in range(len(r) - 1, k - 1, -1):
        c = r[deg]
        if c:
            for i in range(k + 1):
                r[deg - k + i] = (r[deg - k + i] - c * modulus[i]) % p
    return r[:k]


def _x_order(modulus, p):
    """Multiplicative order of x modulo ``modulus`` (0 if x is a zero divisor)."""
    k = len(modulus) - 1
    one = [1] + [0] * (k - 1)
    x = [0, 1] + [0] * (k - 2)
    cur = one
    for e in range(1, p**k):
        cur = _mulmod(cur, x, modulus, p)
        if cur == one:
            return e
    return 0


def find_primitive_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic primitive polynomial of degree ``k`` over F_p."""
    if k == 1:
        return (0, 1)
    if (p, k) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, k)]
    for tail in itertools.product(range(p), repeat=k):
        m = tuple(tail) + (1,)
        if m[0] and _x_order(m, p) == p**k - 1:
            return m
    raise ValueError(f"no primitive polynomial of degree {k} over F_{p}")


class FiniteField:
    """The field F_{p^k} = F_p[a]/(modulus).

    Parameters
    ----------
    p : int
        Characteristic (prime).
    k : int
        Degree over F_p.
    modulus : sequence of int, optional
        Monic irreducible polynomial, low -> high.  Defaults to the shipped
        primitive polynomial.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_primitive_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}: {modulus}")
        self.p = p
        self.k = k
        self.size = p**k
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, k, N = self.p, self.k, self.size
        codes = np.arange(N)
        digits = np.zeros((N, k), dtype=np.int64)
        rest = codes.copy()
        for i in range(k):
            digits[:, i] = rest % p
            rest //= p
        self.digits = digits
        self.powers = p ** np.arange(k, dtype=np.int64)
        # find a generator of the multiplicative group
        gen = None
        for g in range(2 if N > 2 else 1, N):
            if self._order_slow(g) == N - 1:
                gen = g
                break
        if gen is None:
            raise ValueError(f"modulus {self.modulus} is not irreducible over F_{p}")
        exp = np.zeros(2 * (N - 1), dtype=np.int64)
        log = np.full(N, -1, dtype=np.int64)
        cur = 1
        for e in range(N - 1):
            exp[e] = cur
            if log[cur] != -1:
                raise ValueError(f"modulus {self.modulus} is not irreducible over F_{p}")
            log[cur] = e
            cur = self._mul_slow(cur, gen)
        exp[N - 1:] = exp[: N - 1]
        self.generator = gen
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._neg_list = [self.from_digits((-digits[c]) % p) for c in range(N)]

    def _mul_slow(self, a, b):
        da = [int(x) for x in self.digits[a]]
        db = [int(x) for x in self.digits[b]]
        if self.k == 1:
            return (a * b) % self.p
        return self.from_digits(_mulmod(da, db, self.modulus, self.p))

    def _order_slow(self, g):
        cur, e = g, 1
        while cur != 1:
            cur = self._mul_slow(cur, g)
            e += 1
            if e > self.size:
                return 0
        return e

    # -- scalar arithmetic on codes -------------------------------------------------
    def from_digits(self, ds) -> int:
        return int(sum(int(c) * self.p**i for i, c in enumerate(ds)))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` (in the prime field)."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits((self.digits[a] + self.digits[b]) % self.p)

    def neg(self, a: int) -> int:
        return self._neg_list[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_list[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self._exp_list[(self.size - 1 - self._log_list[a]) % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if n == 0 else 0
        return self._exp_list[(self._log_list[a] * n) % (self.size - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.size - 1
        e = self._log_list[a]
        from math import gcd

        return n // gcd(n, e)

    def elements(self):
        return range(self.size)

    # -- vectorised helpers used by the series kernels ---------------------------------
    def mul_matrix(self, c: int) -> np.ndarray:
        """Matrix M over F_p with ``M @ digits(x) == digits(c*x)``."""
        cols = [self.digits[self.mul(c, self.p**j)] for j in range(self.k)]
        return np.stack(cols, axis=1)

    def codes_of(self, rows: np.ndarray) -> np.ndarray:
        return rows @ self.powers

    @cached_property
    def _frob_cache(self):
        return {}

    def power_table(self, e: int) -> np.ndarray:
        """Lookup table code -> code**e (e >= 1)."""
        tab = self._frob_cache.get(e)
        if tab is None:
            tab = np.array([self.pow(c, e) for c in range(self.size)], dtype=np.int64)
            self._frob_cache[e] = tab
        return tab

    def format(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        return "(" + ",".join(str(int(c)) for c in self.digits[code]) + ")"

    def parse(self, text: str) -> int:
        text = text.strip()
        if text.startswith("("):
            ds = [int(x) for x in text[1:-1].split(",")]
            if len(ds) != self.k:
                raise ValueError(f"expected {self.k} coordinates: {text}")
            return self.from_digits([d % self.p for d in ds])
        return self.from_int(int(text))

    def __call__(self, code) -> "FqElem":
        return FqElem(self, int(code))

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))


@dataclass(frozen=True)
class FqElem:
    """A single element of a :class:`FiniteField`."""

    field: FiniteField
    code: int

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.sub(c, self.code))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.div(self.code, c))

    def __pow__(self, n: int):
        return FqElem(self.field, self.field.pow(self.code, n))

    def frobenius(self, power: int | None = None) -> "FqElem":
        """x -> x**power (default the characteristic)."""
        return self ** (power or self.field.p)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FqElem({self.field.format(self.code)} in F_{self.field.size})"


class FieldTower:
    """F_q inside F_{q^d}, with q = p^m.

    All series arithmetic happens in ``big``; ``embed`` maps codes of the
    small field ``base`` to codes of ``big``.
    """

    def __init__(self, p: int, m: int = 1, d: int = 1, base_modulus=None, big_modulus=None):
        self.p = p
        self.m = m
        self.d = d
        self.q = p**m
        self.base = FiniteField(p, m, base_modulus)
        self.big = FiniteField(p, m * d, big_modulus)
        self.embedding = self._find_embedding()
        self._base_set = frozenset(self.embedding)

    @classmethod
    def for_q(cls, q: int, d: int = 1, **kw) -> "FieldTower":
        p, m = factor_prime_power(q)
        return cls(p, m, d, **kw)

    def _find_embedding(self) -> list[int]:
        base, big = self.base, self.big
        if base.k == 1:
            return [big.from_int(c) for c in range(base.size)]
        # image of the base generator a: smallest root of the base modulus in big
        for r in range(big.size):
            acc = 0
            for coef in reversed(base.modulus):
                acc = big.add(big.mul(acc, r), big.from_int(coef))
            if acc == 0:
                break
        else:
            raise ValueError("base modulus has no root in the extension field")
        table = []
        for code in range(base.size):
            acc, rp = 0, 1
            for c in base.digits[code]:
                acc = big.add(acc, big.mul(big.from_int(int(c)), rp))
                rp = big.mul(rp, r)
            table.append(acc)
        return table

    def embed(self, base_code: int) -> int:
        return self.embedding[base_code]

    def is_in_base(self, code: int) -> bool:
        return self.big.pow(code, self.q) == code

    def base_elements(self) -> list[int]:
        """Codes (in ``big``) of F_q, in base-code order."""
        return list(self.embedding)

    def frobenius(self, code: int, times: int = 1) -> int:
        return self.big.pow(code, self.q**times)

    def root_of_unity(self, n: int) -> int:
        """Smallest-code element of F_q^x of exact order n."""
        for c in self.embedding[1:]:
            if self.big.order(c) == n:
                return c
        raise ValueError(f"F_{self.q} has no element of order {n}")

    def exact_degree(self, code: int) -> int:
        """Degree over F_q of the field generated by ``code``."""
        for j in range(1, self.d + 1):
            if self.frobenius(code, j) == code:
                return j
        raise AssertionError("unreachable: x^(q^d) = x in F_{q^d}")

    def __repr__(self):
        return f"FieldTower(q={self.q}, d={self.d})"


def factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                break
            return p, m
    raise ValueError(f"q={q} is not a prime power")
