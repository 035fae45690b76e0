"""Skew polynomials and truncated skew series over difference rings.

A ring adapter bundles the arithmetic of a coefficient type with its
endomorphism tau.  Operators are immutable coefficient lists; the product
follows ``c tau^i * d tau^j = c tau^(n i)(d) tau^(i+j)`` where ``n`` is the
operator's tau_power.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import Agreement, LaurentSeries, RadicalScaled
from .qdilation import QDilationElem
from .ratfunc import Poly, RationalFn
from .tseries import TSeries

__all__ = [
    "FrobeniusRing",
    "QDilationRing",
    "RadicalRing",
    "ShiftRing",
    "SkewOperator",
    "TSeriesRing",
    "apply",
    "right_divide",
    "skew_algebra_check",
    "skew_mul",
]


class _Ring:
    """Default adapter over a type with Python operators."""

    name = "ring"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def act(self, c, z):
        """Action of an operator coefficient on an element (default: product)."""
        return self.mul(c, z)

    def div(self, a, b):
        return a / b

    def is_exact_zero(self, a) -> bool:
        return self.is_zero(a)

    def agrees(self, a, b) -> Agreement:
        return Agreement(a == b, None if a == b else 0, None)

    def magnitude(self, a):
        """Order of magnitude used to express relative precision (None if n/a)."""
        return None

    def to_json(self, a):
        return str(a)


class ShiftRing(_Ring):
    """Q(s) with tau f(s) = f(s+1)."""

    name = "shift"

    def __init__(self, var: str = "s"):
        self.var = var

    def zero(self):
        return RationalFn.const(0, self.var)

    def one(self):
        return RationalFn.const(1, self.var)

    def from_int(self, n):
        return RationalFn.const(Fraction(n), self.var)

    def variable(self):
        return RationalFn.variable(self.var)

    def is_zero(self, a):
        return a.is_zero()

    def tau(self, a, k=1):
        return a.shift(k)

    def to_json(self, a):
        return str(a)


class FrobeniusRing(_Ring):
    """F((u)) with tau = q-th power.

    ``rel_prec`` (if set) bounds the relative precision kept after products,
    inverses and Frobenius twists; exact elements stay exact under addition.
    """

    name = "frobenius"

    def __init__(self, field, q: int, rel_prec: int | None = None):
        self.field = field
        self.q = q
        self.rel_prec = rel_prec

    def _cap(self, x: LaurentSeries) -> LaurentSeries:
        if self.rel_prec is None or x.prec is None and self.rel_prec is None:
            return x
        if x.prec is None:
            return x
        return x.truncate_rel(self.rel_prec)

    def zero(self):
        return LaurentSeries.zero(self.field)

    def one(self):
        return LaurentSeries.one(self.field)

    def from_int(self, n):
        return LaurentSeries.monomial(self.field, 0, self.field.from_int(n))

    def constant(self, code):
        return LaurentSeries.monomial(self.field, 0, code)

    def theta(self):
        return LaurentSeries.theta(self.field)

    def is_zero(self, a):
        return a.is_zero()

    def is_exact_zero(self, a):
        return a.is_exact_zero()

    def mul(self, a, b):
        return self._cap(a * b)

    def div(self, a, b):
        return self._cap(a.divide(b, self.rel_prec))

    def tau(self, a, k=1):
        if k == 0:
            return a
        return a.frobenius(self.q**k, self.rel_prec)

    def agrees(self, a, b):
        return a.agrees(b)

    def magnitude(self, a):
        return a.order

    def to_json(self, a):
        return a.to_json()


class RadicalRing(_Ring):
    """rho-graded series rho^e F((u)); tau is the q-Frobenius."""

    name = "radical"

    def __init__(self, field, q: int, rel_prec: int | None = None):
        self.field = field
        self.q = q
        self.rel_prec = rel_prec

    def zero(self, e=0):
        return RadicalScaled(self.q, e, LaurentSeries.zero(self.field))

    def one(self):
        return RadicalScaled(self.q, 0, LaurentSeries.one(self.field))

    def is_zero(self, a):
        return a.is_zero()

    def is_exact_zero(self, a):
        return a.body.is_exact_zero()

    def act(self, c, z):
        if isinstance(c, LaurentSeries):
            return RadicalScaled(self.q, z.e, c * z.body)
        return c * z

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a.divide(b, self.rel_prec)

    def tau(self, a, k=1):
        return a.tau(k, self.rel_prec)

    def agrees(self, a, b):
        return a.agrees(b)

    def magnitude(self, a):
        return a.order

    def to_json(self, a):
        return a.to_json()


class QDilationRing(_Ring):
    """Laurent polynomials in x over Q(qh) with tau x = qh x."""

    name = "qdilation"

    def zero(self):
        return QDilationElem({})

    def one(self):
        return QDilationElem.const(1)

    def from_int(self, n):
        return QDilationElem.const(n)

    def variable(self):
        return QDilationElem.x()

    def is_zero(self, a):
        return a.is_zero()

    def tau(self, a, k=1):
        return a.tau(k)

    def div(self, a, b):
        """a / b for a monomial b = c x^k (the only units)."""
        if len(b.coeffs) != 1 or b.window is not None:
            raise ZeroDivisionError("only monomials are invertible")
        (k, c), = b.coeffs.items()
        inv = QDilationElem({-k: RationalFn.const(1, c.var) / c})
        return a * inv

    def agrees(self, a, b):
        diff = a - b
        if diff.is_zero():
            return Agreement(True, None, None)
        return Agreement(False, min(diff.coeffs), None)

    def to_json(self, a):
        return a.to_json()


class TSeriesRing(_Ring):
    """Truncated t-series over a coefficient ring; tau acts coefficientwise."""

    name = "tseries"

    def __init__(self, base: _Ring):
        self.base = base

    def is_zero(self, a):
        return all(self.base.is_zero(c) for c in a.coeffs)

    def tau(self, a, k=1):
        return TSeries([self.base.tau(c, k) for c in a.coeffs], a.t_prec, a.zero)

    def act(self, c, z):
        return TSeries([self.base.act(c, x) for x in z.coeffs], z.t_prec, z.zero)

    def add(self, a, b):
        return a + b

    def agrees(self, a, b):
        first, prec = None, None
        for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
            ag = self.base.agrees(x, y)
            if ag.prec is not None:
                prec = ag.prec if prec is None else min(prec, ag.prec)
            if not ag.ok and first is None:
                first = i
        return Agreement(first is None, first, prec)

    def to_json(self, a):
        return {"t_prec": a.t_prec, "coeffs": [self.base.to_json(c) for c in a.coeffs]}


class SkewOperator:
    """sum_i c_i tau^(n i) with c_i in ``ring``.

    Parameters
    ----------
    ring : ring adapter
    coeffs : sequence
        c_0, c_1, ...
    tau_power : int
        n >= 1; the operator lives in K[tau^n].
    trunc : int or None
        Largest retained tau-order for series; None for polynomials.
    """

    __slots__ = ("ring", "coeffs", "tau_power", "trunc")

    def __init__(self, ring, coeffs, tau_power: int = 1, trunc: int | None = None):
        if tau_power < 1:
            raise ValueError("tau_power must be >= 1")
        coeffs = list(coeffs)
        if trunc is not None:
            coeffs = coeffs[: trunc + 1]
        else:
            while coeffs and ring.is_exact_zero(coeffs[-1]):
                coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.tau_power = tau_power
        self.trunc = trunc

    @classmethod
    def identity(cls, ring, tau_power=1, trunc=None):
        return cls(ring, [ring.one()], tau_power, trunc)

    @classmethod
    def scalar(cls, ring, c, tau_power=1, trunc=None):
        return cls(ring, [c], tau_power, trunc)

    @classmethod
    def tau_monomial(cls, ring, k=1, c=None, tau_power=1):
        c = ring.one() if c is None else c
        return cls(ring, [ring.zero()] * k + [c], tau_power)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i):
        if self.trunc is not None and i > self.trunc:
            raise IndexError(f"tau-order {i} beyond truncation {self.trunc}")
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero()

    def __add__(self, o):
        _match(self, o)
        trunc = _tmin(self.trunc, o.trunc)
        n = max(len(self.coeffs), len(o.coeffs))
        if trunc is not None:
            n = min(n, trunc + 1)
        r = self.ring
        cs = [r.add(self.coefficient(i), o.coefficient(i)) for i in range(n)]
        return SkewOperator(r, cs, self.tau_power, trunc)

    def __sub__(self, o):
        _match(self, o)
        trunc = _tmin(self.trunc, o.trunc)
        n = max(len(self.coeffs), len(o.coeffs))
        if trunc is not None:
            n = min(n, trunc + 1)
        r = self.ring
        cs = [r.sub(self.coefficient(i), o.coefficient(i)) for i in range(n)]
        return SkewOperator(r, cs, self.tau_power, trunc)

    def __mul__(self, o):
        return skew_mul(self, o)

    def truncate(self, order: int) -> "SkewOperator":
        return SkewOperator(self.ring, self.coeffs, self.tau_power, _tmin(self.trunc, order))

    def agrees(self, o) -> Agreement:
        """Coefficientwise comparison on the common tau-range."""
        _match(self, o)
        trunc = _tmin(self.trunc, o.trunc)
        n = max(len(self.coeffs), len(o.coeffs))
        if trunc is not None:
            n = min(n, trunc + 1)
        prec, first = None, None
        for i in range(n):
            ag = self.ring.agrees(self.coefficient(i), o.coefficient(i))
            if ag.prec is not None:
                prec = ag.prec if prec is None else min(prec, ag.prec)
            if not ag.ok and first is None:
                first = i
        return Agreement(first is None, first, prec)

    def to_json(self):
        return {
            "tau_power": self.tau_power,
            "trunc": self.trunc,
            "coeffs": [self.ring.to_json(c) for c in self.coeffs],
        }

    def __repr__(self):
        return f"SkewOperator(deg={self.degree}, tau_power={self.tau_power}, trunc={self.trunc})"


def _tmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _match(L, M):
    if L.tau_power != M.tau_power:
        raise ValueError("operators with different tau_power")


def skew_mul(L: SkewOperator, M: SkewOperator, with_scale: bool = False):
    """L*M.  With ``with_scale`` also return per-coefficient term magnitudes.

    The magnitude of coefficient k is the smallest ring magnitude among the
    products c_i tau^(n i)(d_j) contributing to it; for Laurent coefficients
    it is the order of the dominant term, so ``prec - magnitude`` is the
    relative precision of a coefficient that cancels.
    """
    _match(L, M)
    r = L.ring
    n = L.tau_power
    trunc = _tmin(L.trunc, M.trunc)
    top = len(L.coeffs) + len(M.coeffs) - 2
    if trunc is not None:
        top = min(top, trunc)
    twisted = {}  # (i, j) -> tau^(n i)(d_j)
    out, scales = [], []
    for k in range(top + 1):
        acc, scale = None, None
        for i in range(max(0, k - len(M.coeffs) + 1), min(k, len(L.coeffs) - 1) + 1):
            j = k - i
            c = L.coeffs[i]
            if r.is_exact_zero(c) or r.is_exact_zero(M.coeffs[j]):
                continue
            key = (i, j)
            if key not in twisted:
                prev = twisted.get((i - 1, j)) if i else None
                twisted[key] = r.tau(prev, n) if prev is not None else r.tau(M.coeffs[j], n * i)
            term = r.mul(c, twisted[key])
            m = r.magnitude(term)
            if m is not None:
                scale = m if scale is None else min(scale, m)
            acc = term if acc is None else r.add(acc, term)
        out.append(r.zero() if acc is None else acc)
        scales.append(scale)
    res = SkewOperator(r, out, n, trunc)
    return (res, scales) if with_scale else res


def apply(L: SkewOperator, z, zring=None):
    """sum_i c_i tau^(n i)(z); ``zring`` supplies tau on z and the action."""
    zring = zring or L.ring
    acc = None
    cur = z
    for i, c in enumerate(L.coeffs):
        if i:
            cur = zring.tau(cur, L.tau_power)
        if L.ring.is_exact_zero(c):
            continue
        term = zring.act(c, cur)
        acc = term if acc is None else zring.add(acc, term)
    if acc is None:
        return zring.sub(z, z)
    return acc


def right_divide(L: SkewOperator, M: SkewOperator):
    """(Q, R) with L = Q*M + R and deg R < deg M (polynomial operators)."""
    _match(L, M)
    if L.trunc is not None or M.trunc is not None:
        raise ValueError("right division needs polynomial (non-truncated) operators")
    r = L.ring
    n = L.tau_power
    if not M.coeffs or r.is_zero(M.coeffs[-1]):
        raise ZeroDivisionError("divisor has no invertible leading coefficient")
    m = M.degree
    lead = M.coeffs[-1]
    rem = list(L.coeffs)
    quot = [r.zero()] * max(0, len(rem) - m)
    while len(rem) - 1 >= m:
        k = len(rem) - 1
        top = rem[-1]
        if not r.is_exact_zero(top):
            c = r.div(top, r.tau(lead, n * (k - m)))
            quot[k - m] = c
            for j in range(m):
                rem[k - m + j] = r.sub(rem[k - m + j], r.mul(c, r.tau(M.coeffs[j], n * (k - m))))
        rem.pop()  # the top cancels by construction
    return SkewOperator(r, quot, n), SkewOperator(r, rem, n)


# -- randomized soundness -------------------------------------------------------------


def _random_element(backend, rng, ring, grade=0):
    if backend == "shift":
        num = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))]
        den = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 1))] + [Fraction(1)]
        return RationalFn(Poly(num), Poly(den), ring.var)
    if backend in ("frobenius", "radical"):
        F = ring.field
        lo = rng.randint(-2, 1)
        terms = {lo + i: rng.randrange(F.size) for i in range(rng.randint(1, 3))}
        body = LaurentSeries.from_terms(F, terms)
        return body if backend == "frobenius" else RadicalScaled(ring.q, grade, body)
    if backend == "qdilation":
        cs = {}
        for _ in range(rng.randint(1, 2)):
            m = rng.randint(-2, 2)
            cs[m] = RationalFn.const(Fraction(rng.randint(-3, 3)), "q") + RationalFn.variable("q") ** rng.randint(0, 2)
        return QDilationElem(cs)
    raise ValueError(f"unknown backend {backend!r}")


def _random_operator(backend, rng, ring, grade=0, monic=False):
    deg = rng.randint(0, 2)
    cs = [_random_element(backend, rng, ring, grade) for _ in range(deg + 1)]
    if monic:
        cs[-1] = ring.one() if backend != "radical" else RadicalScaled(ring.q, 0, LaurentSeries.one(ring.field))
        if backend == "qdilation":
            cs[-1] = QDilationElem.x(rng.randint(-1, 1))
    return SkewOperator(ring, cs)


def make_ring(backend: str, field=None, q: int | None = None):
    if backend in ("frobenius", "radical") and field is None:
        from .fields import FieldTower

        q = q or 3
        field = FieldTower.for_q(q).big
    if backend == "shift":
        return ShiftRing("s")
    if backend == "frobenius":
        return FrobeniusRing(field, q)
    if backend == "radical":
        return RadicalRing(field, q)
    if backend == "qdilation":
        return QDilationRing()
    raise ValueError(f"unknown backend {backend!r}")


def skew_algebra_check(backend: str, n_triples: int = 200, seed: int = 0, field=None, q=None) -> dict:
    """(LM)N = L(MN), apply(LM, z) = apply(L, apply(M, z)) and L = QM + R on random data.

    Returns counts of failures per property; every comparison is exact.
    """
    import random

    rng = random.Random(f"{backend}:{seed}")
    ring = make_ring(backend, field, q)
    q = getattr(ring, "q", q)
    grades = (q - 1) if backend == "radical" and q > 2 else 1
    fails = {"associativity": 0, "apply_composition": 0, "right_division": 0}
    first = {}
    for t in range(n_triples):
        ga, gb, gc = (rng.randrange(grades) for _ in range(3))
        L = _random_operator(backend, rng, ring, ga)
        M = _random_operator(backend, rng, ring, gb)
        N = _random_operator(backend, rng, ring, gc)
        if not ((L * M) * N).agrees(L * (M * N)).ok:
            fails["associativity"] += 1
            first.setdefault("associativity", t)
        z = _random_element(backend, rng, ring, rng.randrange(grades))
        lhs = apply(L * M, z, ring)
        rhs = apply(L, apply(M, z, ring), ring)
        if not ring.agrees(lhs, rhs).ok:
            fails["apply_composition"] += 1
            first.setdefault("apply_composition", t)
        D = _random_operator(backend, rng, ring, 0, monic=True)
        P = L * D + M if backend != "radical" or ga == gb else L * D
        Qt, R = right_divide(P, D)
        if not (Qt * D + R).agrees(P).ok or R.degree >= D.degree:
            fails["right_division"] += 1
            first.setdefault("right_division", t)
    return {"backend": backend, "triples": n_triples, "failures": fails, "first_failure": first}
