"""Exact polynomials and rational functions over Q in one variable."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Poly", "RationalFn"]


def _num(x):
    """Exact rational as an int when integral (ints are much cheaper than Fractions)."""
    if x.__class__ is int:
        return x
    if x.__class__ is not Fraction:
        x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _div(a, b):
    return _num(Fraction(a) / b)


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Dense polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _trim(_num(x) for x in coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, a):
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def __add__(self, o):
        o = _as_poly(o)
        n = max(len(self.c), len(o.c))
        a = self.c + (0,) * (n - len(self.c))
        b = o.c + (0,) * (n - len(o.c))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.c)

    def __sub__(self, o):
        return self + (-_as_poly(o))

    def __rsub__(self, o):
        return _as_poly(o) - self

    def __mul__(self, o):
        o = _as_poly(o)
        if not self.c or not o.c:
            return Poly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = Poly.const(1)
        for _ in range(n):
            r = r * self
        return r

    def divmod(self, o: "Poly"):
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(o.c)
        if dq < 0:
            return Poly(), self
        q = [0] * (dq + 1)
        inv = _div(1, o.lc())
        for i in range(dq, -1, -1):
            coef = _num(r[i + len(o.c) - 1] * inv)
            q[i] = coef
            if coef:
                for j, b in enumerate(o.c):
                    r[i + j] -= coef * b
        return Poly(q), Poly(r[: len(o.c) - 1])

    def monic(self) -> "Poly":
        lc = self.lc()
        if lc == 1:
            return self
        return Poly(_div(x, lc) for x in self.c) if self.c else self

    def gcd(self, o: "Poly") -> "Poly":
        a, b = self, o
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def shift(self, n) -> "Poly":
        """p(x + n) by Horner's rule."""
        if n == 0 or len(self.c) <= 1:
            return self
        lin = Poly((n, 1))
        out = Poly()
        for a in reversed(self.c):
            out = out * lin + a
        return out

    def scale_var(self, a) -> "Poly":
        """p(a*x)."""
        a = Fraction(a)
        return Poly(c * a**i for i, c in enumerate(self.c))

    def __call__(self, z):
        exact = isinstance(z, (int, Fraction))
        acc = 0
        for a in reversed(self.c):
            acc = acc * z + (a if exact else float(a))
        return acc

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = Poly.const(o)
        return isinstance(o, Poly) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def format(self, var="s") -> str:
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and a == 1:
                t = mono
            elif mono and a == -1:
                t = "-" + mono
            elif mono:
                t = f"{a}*{mono}"
            else:
                t = str(a)
            parts.append(t)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.format('x')})"


def _as_poly(o) -> Poly:
    if isinstance(o, Poly):
        return o
    if isinstance(o, (int, Fraction)):
        return Poly.const(o)
    raise TypeError(f"cannot coerce {type(o).__name__} to Poly")


class RationalFn:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=None, var: str = "s", _normalized: bool = False):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if not num:
                den = Poly.const(1)
            elif den.degree > 0 and not any(den.c[:-1]):
                # monomial denominator: cancel the common power of the variable
                v = min(next(i for i, c in enumerate(num.c) if c), den.degree)
                if v:
                    num = Poly(num.c[v:])
                    den = Poly(den.c[v:])
            elif den.degree > 0:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
            lc = den.lc()
            if lc != 1:
                num = Poly(_div(c, lc) for c in num.c)
                den = Poly(_div(c, lc) for c in den.c)
        self.num = num
        self.den = den
        self.var = var

    @classmethod
    def variable(cls, var="s"):
        return cls(Poly.x(), var=var)

    @classmethod
    def const(cls, a, var="s"):
        return cls(Poly.const(a), var=var)

    def _co(self, o) -> "RationalFn":
        if isinstance(o, RationalFn):
            return o
        if isinstance(o, (int, Fraction)):
            return RationalFn(Poly.const(o), var=self.var, _normalized=True)
        if isinstance(o, Poly):
            return RationalFn(o, var=self.var, _normalized=True)
        raise TypeError(f"cannot coerce {type(o).__name__} to RationalFn")

    def __add__(self, o):
        o = self._co(o)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den, self.var)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, self.var, _normalized=True)

    def __sub__(self, o):
        return self + (-self._co(o))

    def __rsub__(self, o):
        return self._co(o) - self

    def __mul__(self, o):
        o = self._co(o)
        return RationalFn(self.num * o.num, self.den * o.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._co(o)
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num, self.var)

    def __rtruediv__(self, o):
        return self._co(o) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFn.const(1, self.var) / (self ** (-n))
        return RationalFn(self.num**n, self.den**n, self.var, _normalized=True)

    def shift(self, n=1) -> "RationalFn":
        """f(s) -> f(s + n); the normal form is preserved."""
        return RationalFn(self.num.shift(n), self.den.shift(n), self.var, _normalized=True)

    def dilate(self, a) -> "RationalFn":
        """f(x) -> f(a x)."""
        return RationalFn(self.num.scale_var(a), self.den.scale_var(a), self.var)

    def is_zero(self) -> bool:
        return not self.num

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, Poly)):
            o = self._co(o)
        return isinstance(o, RationalFn) and self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        n = self.num.format(self.var)
        if self.den.degree == 0:
            return n
        return f"({n})/({self.den.format(self.var)})"

    def __repr__(self):
        return f"RationalFn({self})"

    def to_json(self):
        return {
            "var": self.var,
            "num": [str(c) for c in self.num.c],
            "den": [str(c) for c in self.den.c],
        }
