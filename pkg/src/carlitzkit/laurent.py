"""Truncated Laurent series in u = 1/theta over a finite field.

A series stores the digit rows of its coefficients from ``start`` onwards.
``prec`` is an absolute bound: coefficients of u^e with e < prec are exact,
everything from ``prec`` on is unknown.  ``prec=None`` marks an exact object
(a Laurent polynomial in u, e.g. a polynomial in theta).
"""

from __future__ import annotations

import math

import numpy as np

from .fields import FiniteField

__all__ = ["LaurentSeries", "PrecisionError", "RadicalScaled", "polymul"]

INF = math.inf
SPARSE_LIMIT = 24


class PrecisionError(ArithmeticError):
    """Raised when an operation would need coefficients that are not known."""


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _reduce(C: np.ndarray, field: FiniteField) -> np.ndarray:
    p, k = field.p, field.k
    C %= p
    mod = field.modulus
    for deg in range(C.shape[1] - 1, k - 1, -1):
        c = C[:, deg]
        if not c.any():
            continue
        for i in range(k):
            if mod[i]:
                C[:, deg - k + i] -= c * mod[i]
        C[:, deg - k:deg + 1] %= p
    return C[:, :k] % p


def polymul(A: np.ndarray, B: np.ndarray, field: FiniteField) -> np.ndarray:
    """Product of two digit-row polynomials (rows = coefficients)."""
    n, m = len(A), len(B)
    k = field.k
    if n == 0 or m == 0:
        return np.zeros((0, k), dtype=np.int64)
    nz_a = np.flatnonzero(A.any(axis=1))
    nz_b = np.flatnonzero(B.any(axis=1))
    if len(nz_a) <= SPARSE_LIMIT or len(nz_b) <= SPARSE_LIMIT:
        if len(nz_b) < len(nz_a):
            A, B, nz_a = B, A, nz_b
            n, m = m, n
        out = np.zeros((n + m - 1, k), dtype=np.int64)
        codes = A[nz_a] @ field.powers
        for i, c in zip(nz_a.tolist(), codes.tolist()):
            if k == 1:
                out[i:i + m] += c * B
            else:
                out[i:i + m] += B @ field.mul_matrix(c).T
            if field.p > 40:
                out[i:i + m] %= field.p
        return out % field.p
    if k == 1:
        return (np.convolve(A[:, 0], B[:, 0]) % field.p)[:, None]
    C = np.zeros((n + m - 1, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        ai = A[:, i]
        if not ai.any():
            continue
        for j in range(k):
            bj = B[:, j]
            if bj.any():
                C[:, i + j] += np.convolve(ai, bj)
    return _reduce(C, field)


def _inverse_rows(f: np.ndarray, R: int, field: FiniteField) -> np.ndarray:
    """First R coefficients of 1/f for a unit power series f (f[0] != 0)."""
    k, p = field.k, field.p
    g = np.zeros((1, k), dtype=np.int64)
    g[0] = field.digits[field.inv(int(f[0] @ field.powers))]
    n = 1
    two = 2 % p
    while n < R:
        n2 = min(2 * n, R)
        e = polymul(f[:n2], g, field)[:n2]
        e = (-e) % p
        if len(e) < n2:
            e = np.vstack([e, np.zeros((n2 - len(e), k), dtype=np.int64)])
        e[0, 0] = (e[0, 0] + two) % p
        g = polymul(g, e, field)[:n2]
        n = n2
    return g[:R]


class LaurentSeries:
    """Element of F((u)) known below an absolute precision.

    Parameters
    ----------
    field : FiniteField
        Coefficient field.
    start : int
        Exponent of the first stored row.
    data : array of shape (n, k)
        Digit rows of the coefficients of u^start, u^(start+1), ...
    prec : int or None
        Absolute precision; None for an exact Laurent polynomial.
    """

    __slots__ = ("field", "start", "data", "prec")

    def __init__(self, field: FiniteField, start: int, data, prec: int | None = None):
        data = np.asarray(data, dtype=np.int64)
        if data.ndim == 1:
            data = data[:, None] if field.k == 1 else data.reshape(-1, field.k)
        if prec is not None:
            keep = max(0, prec - start)
            data = data[:keep]
        nz = np.flatnonzero(data.any(axis=1)) if len(data) else np.zeros(0, dtype=np.int64)
        if len(nz) == 0:
            start = prec if prec is not None else 0
            data = np.zeros((0, field.k), dtype=np.int64)
        else:
            first, last = int(nz[0]), int(nz[-1])
            start += first
            data = data[first:last + 1]
        data.setflags(write=False)
        self.field = field
        self.start = int(start)
        self.data = data
        self.prec = prec

    # -- constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, field, prec=None):
        return cls(field, 0, np.zeros((0, field.k)), prec)

    @classmethod
    def monomial(cls, field, exp: int, code: int = 1, prec=None):
        return cls(field, exp, field.digits[[code]], prec)

    @classmethod
    def one(cls, field, prec=None):
        return cls.monomial(field, 0, 1, prec)

    @classmethod
    def theta(cls, field):
        """theta = u^(-1), exact."""
        return cls.monomial(field, -1, 1)

    @classmethod
    def from_theta_poly(cls, field, coeffs):
        """Exact element sum_j coeffs[j] * theta^j (codes in ``field``)."""
        coeffs = [int(c) for c in coeffs]
        if not any(coeffs):
            return cls.zero(field)
        D = len(coeffs) - 1
        rows = field.digits[list(reversed(coeffs))]
        return cls(field, -D, rows)

    @classmethod
    def from_terms(cls, field, terms: dict, prec=None):
        """Build from a mapping exponent -> code."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(field, prec)
        lo, hi = min(terms), max(terms)
        rows = np.zeros((hi - lo + 1, field.k), dtype=np.int64)
        for e, c in terms.items():
            rows[e - lo] = field.digits[c]
        return cls(field, lo, rows, prec)

    # -- basic queries ------------------------------------------------------------
    @property
    def exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        """True when no nonzero coefficient is known (exact or not)."""
        return len(self.data) == 0

    def is_exact_zero(self) -> bool:
        return self.prec is None and len(self.data) == 0

    @property
    def order(self):
        """Valuation in u; ``prec`` for an inexact zero, inf for the exact zero."""
        if len(self.data):
            return self.start
        return INF if self.prec is None else self.prec

    @property
    def rel_prec(self):
        if self.prec is None:
            return None
        return self.prec - self.order

    def codes(self) -> np.ndarray:
        return self.data @ self.field.powers

    def coefficient(self, e: int) -> int:
        if self.prec is not None and e >= self.prec:
            raise PrecisionError(f"coefficient of u^{e} unknown (prec {self.prec})")
        i = e - self.start
        if 0 <= i < len(self.data):
            return int(self.data[i] @ self.field.powers)
        return 0

    def leading_code(self) -> int:
        if not len(self.data):
            raise PrecisionError("leading coefficient of a zero series")
        return int(self.data[0] @ self.field.powers)

    def terms(self) -> dict:
        codes = self.codes().tolist()
        return {self.start + i: c for i, c in enumerate(codes) if c}

    def degree_theta(self) -> int:
        """-order; the theta-degree of a nonzero element."""
        return -self.start

    # -- arithmetic ------------------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"expected LaurentSeries, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ValueError("series over different fields")

    def _aligned(self, other):
        prec = _pmin(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return None, None, None, prec
        lo = min(x.start for x in (self, other) if not x.is_zero())
        hi = max(x.start + len(x.data) for x in (self, other) if not x.is_zero())
        if prec is not None:
            hi = min(hi, prec)
            if hi <= lo:
                return None, None, None, prec
        k = self.field.k
        A = np.zeros((hi - lo, k), dtype=np.int64)
        B = np.zeros((hi - lo, k), dtype=np.int64)
        for dst, x in ((A, self), (B, other)):
            if x.is_zero():
                continue
            a = x.start - lo
            b = min(a + len(x.data), hi - lo)
            if b > a:
                dst[a:b] = x.data[: b - a]
        return lo, A, B, prec

    def __add__(self, other):
        self._check(other)
        lo, A, B, prec = self._aligned(other)
        if lo is None:
            return LaurentSeries.zero(self.field, prec)
        return LaurentSeries(self.field, lo, (A + B) % self.field.p, prec)

    def __sub__(self, other):
        self._check(other)
        lo, A, B, prec = self._aligned(other)
        if lo is None:
            return LaurentSeries.zero(self.field, prec)
        return LaurentSeries(self.field, lo, (A - B) % self.field.p, prec)

    def __neg__(self):
        return LaurentSeries(self.field, self.start, (-self.data) % self.field.p, self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        self._check(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentSeries.zero(self.field)
        va, vb = self.order, other.order
        prec = None
        if self.prec is not None:
            prec = self.prec + vb
        if other.prec is not None:
            prec = _pmin(prec, other.prec + va)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(self.field, prec)
        A, B = self.data, other.data
        if prec is not None:
            A = A[: max(0, prec - vb - self.start)]
            B = B[: max(0, prec - va - other.start)]
        C = polymul(A, B, self.field)
        return LaurentSeries(self.field, self.start + other.start, C, prec)

    __rmul__ = __mul__

    def scale(self, code: int) -> "LaurentSeries":
        """Multiply by a field element given by its code."""
        f = self.field
        if code == 0:
            return LaurentSeries.zero(f, None if self.prec is None else self.prec)
        if code == 1:
            return self
        if f.k == 1:
            return LaurentSeries(f, self.start, (self.data * code) % f.p, self.prec)
        return LaurentSeries(f, self.start, (self.data @ f.mul_matrix(code).T) % f.p, self.prec)

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by u^n."""
        return LaurentSeries(
            self.field, self.start + n, self.data, None if self.prec is None else self.prec + n
        )

    def is_monomial(self) -> bool:
        return len(self.data) == 1

    def inverse(self, rel_prec: int | None = None) -> "LaurentSeries":
        """1/self.  Exact non-monomials need ``rel_prec`` (relative precision)."""
        if self.is_zero():
            raise PrecisionError("inverse of a series with no known nonzero coefficient")
        v = self.start
        f = self.field
        if self.prec is None and self.is_monomial():
            return LaurentSeries.monomial(f, -v, f.inv(self.leading_code()))
        R = self.rel_prec
        if R is None:
            if rel_prec is None:
                raise PrecisionError("exact inverse of a non-monomial needs rel_prec")
            R = rel_prec
        elif rel_prec is not None:
            R = min(R, rel_prec)
        g = _inverse_rows(self.data[:R], R, f)
        return LaurentSeries(f, -v, g, -v + R)

    def divide(self, other: "LaurentSeries", rel_prec: int | None = None) -> "LaurentSeries":
        """self/other.  Exact operands divide exactly when possible."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a series with no known nonzero coefficient")
        if self.is_exact_zero():
            return self
        if other.prec is None and other.is_monomial():
            return (self * other.inverse())
        if self.prec is None and other.prec is None:
            q = self.exact_quotient(other)
            if q is not None:
                return q
            if rel_prec is None:
                raise PrecisionError("exact quotient does not exist; pass rel_prec")
            return self * other.inverse(rel_prec)
        if self.is_zero():
            return LaurentSeries.zero(self.field, self.prec - other.order)
        R = _pmin(self.rel_prec, rel_prec)
        return self * other.inverse(R)

    def __truediv__(self, other):
        return self.divide(other)

    def exact_quotient(self, other: "LaurentSeries"):
        """Quotient of exact Laurent polynomials if it is one, else None."""
        if self.prec is not None or other.prec is not None:
            raise PrecisionError("exact_quotient needs exact operands")
        if self.is_zero():
            return self
        n, m = len(self.data), len(other.data)
        if m > n:
            return None
        R = n - m + 1
        g = _inverse_rows(other.data[:R], R, self.field)
        qrows = polymul(self.data[:R], g, self.field)[:R]
        q = LaurentSeries(self.field, self.start - other.start, qrows)
        if q * other == self:
            return q
        return None

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, qpow: int, rel_prec: int | None = None) -> "LaurentSeries":
        """sum c_e^qpow u^(qpow e); with rel_prec, keep only that many relative terms."""
        f = self.field
        data = self.data
        prec = None if self.prec is None else self.prec * qpow
        if rel_prec is not None and len(data) * qpow > rel_prec:
            keep = -(-rel_prec // qpow)
            data = data[:keep]
            prec = _pmin(prec, (self.start + keep) * qpow)
        if not len(data):
            return LaurentSeries.zero(f, prec)
        new = f.power_table(qpow)[data @ f.powers]
        rows = np.zeros(((len(data) - 1) * qpow + 1, f.k), dtype=np.int64)
        rows[::qpow] = f.digits[new]
        return LaurentSeries(f, self.start * qpow, rows, prec)

    def truncate_abs(self, prec: int) -> "LaurentSeries":
        return LaurentSeries(self.field, self.start, self.data, _pmin(self.prec, prec))

    def truncate_rel(self, rel: int) -> "LaurentSeries":
        if self.is_exact_zero():
            return self
        return self.truncate_abs(self.order + rel)

    # -- comparison ------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.prec == other.prec
            and self.start == other.start
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.start, self.prec, self.data.tobytes()))

    def agrees(self, other: "LaurentSeries") -> "Agreement":
        """Compare on the common precision window."""
        diff = self - other
        prec = diff.prec
        if diff.is_zero():
            return Agreement(True, None, prec)
        return Agreement(False, diff.start, prec)

    # -- misc --------------------------------------------------------------------------
    def map_coefficients(self, table) -> "LaurentSeries":
        codes = np.asarray(table)[self.codes()]
        return LaurentSeries(self.field, self.start, self.field.digits[codes], self.prec)

    def to_json(self) -> dict:
        return {
            "variable": "u",
            "order": None if self.is_exact_zero() else int(self.order),
            "prec": self.prec,
            "coeffs": [[e, self.field.format(c)] for e, c in sorted(self.terms().items())],
        }

    @classmethod
    def from_json(cls, field, obj) -> "LaurentSeries":
        terms = {int(e): field.parse(c) for e, c in obj["coeffs"]}
        return cls.from_terms(field, terms, obj.get("prec"))

    def __repr__(self):
        items = sorted(self.terms().items())[:6]
        body = " + ".join(f"{self.field.format(c)}*u^{e}" for e, c in items) or "0"
        if len(self.terms()) > 6:
            body += " + ..."
        tail = "" if self.prec is None else f" + O(u^{self.prec})"
        return f"<{body}{tail}>"


class Agreement:
    """Outcome of a truncation-level comparison."""

    __slots__ = ("ok", "first_mismatch", "prec")

    def __init__(self, ok, first_mismatch, prec):
        self.ok = ok
        self.first_mismatch = first_mismatch
        self.prec = prec

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"Agreement(ok={self.ok}, first_mismatch={self.first_mismatch}, prec={self.prec})"


def neg_theta_power(field: FiniteField, c: int) -> LaurentSeries:
    """(-theta)^c as an exact monomial."""
    return LaurentSeries.monomial(field, -c, field.from_int((-1) ** (c % 2)))


class RadicalScaled:
    """rho^e * body with rho^(q-1) = -theta and 0 <= e <= q-2."""

    __slots__ = ("q", "e", "body")

    def __init__(self, q: int, e: int, body: LaurentSeries):
        if q == 2:
            carry, e = e, 0
        else:
            carry, e = divmod(e, q - 1)
        if carry:
            body = body * neg_theta_power(body.field, carry)
        self.q = q
        self.e = e
        self.body = body

    @property
    def field(self):
        return self.body.field

    def _check(self, other):
        if not isinstance(other, RadicalScaled) or other.q != self.q:
            raise TypeError("RadicalScaled operands must share q")

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return RadicalScaled(self.q, self.e, self.body * other)
        self._check(other)
        return RadicalScaled(self.q, self.e + other.e, self.body * other.body)

    __rmul__ = __mul__

    def _homog(self, other):
        self._check(other)
        if self.e != other.e:
            if self.body.is_exact_zero():
                return other.e
            if other.body.is_exact_zero():
                return self.e
            raise ValueError(f"adding rho-degrees {self.e} and {other.e}")
        return self.e

    def __add__(self, other):
        e = self._homog(other)
        return RadicalScaled(self.q, e, self.body + other.body)

    def __sub__(self, other):
        e = self._homog(other)
        return RadicalScaled(self.q, e, self.body - other.body)

    def __neg__(self):
        return RadicalScaled(self.q, self.e, -self.body)

    def scale(self, code):
        return RadicalScaled(self.q, self.e, self.body.scale(code))

    def inverse(self, rel_prec=None):
        """1/(rho^e b) = rho^(q-1-e) / (-theta b) for e > 0."""
        if self.e == 0:
            return RadicalScaled(self.q, 0, self.body.inverse(rel_prec))
        denom = self.body * neg_theta_power(self.field, 1)
        return RadicalScaled(self.q, self.q - 1 - self.e, denom.inverse(rel_prec))

    def divide(self, other, rel_prec=None):
        return self * other.inverse(rel_prec)

    def tau(self, k: int = 1, rel_prec: int | None = None) -> "RadicalScaled":
        """Apply the q-Frobenius k times (rho^(q^k) = rho (-theta)^((q^k-1)/(q-1)))."""
        if k == 0:
            return self
        body = self.body.frobenius(self.q**k, rel_prec)
        if self.e:
            c = self.e * (self.q**k - 1) // (self.q - 1)
            body = body * neg_theta_power(self.field, c)
        return RadicalScaled(self.q, self.e, body)

    def is_zero(self):
        return self.body.is_zero()

    @property
    def order(self):
        """Order of the body; |rho^e b| = q^(e/(q-1) - order)."""
        return self.body.order

    def valuation(self):
        """u-valuation including the fractional radical part (as a float)."""
        return self.body.order - self.e / (self.q - 1)

    def agrees(self, other) -> Agreement:
        self._check(other)
        if self.e != other.e and not (self.body.is_zero() or other.body.is_zero()):
            return Agreement(False, None, None)
        return self.body.agrees(other.body)

    def truncate_abs(self, prec):
        return RadicalScaled(self.q, self.e, self.body.truncate_abs(prec))

    def __eq__(self, other):
        return isinstance(other, RadicalScaled) and (self.q, self.e) == (other.q, other.e) and self.body == other.body

    def __hash__(self):
        return hash((self.q, self.e, self.body))

    def to_json(self):
        return {"rho_deg": self.e, "body": self.body.to_json()}

    def __repr__(self):
        return f"rho^{self.e}*{self.body!r}"
