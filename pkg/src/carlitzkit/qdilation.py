"""Laurent polynomials in x over Q(qh) with the dilation x -> qh*x.

A windowed element knows its coefficients only for exponents in [lo, hi];
exact elements (window None) are genuine Laurent polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RationalFn

__all__ = ["QDilationElem", "qhat"]

VAR = "q"


def qhat(n: int = 1) -> RationalFn:
    """qh^n as an element of Q(qh)."""
    return RationalFn.variable(VAR) ** n


def _coerce(c) -> RationalFn:
    if isinstance(c, RationalFn):
        return c
    return RationalFn.const(Fraction(c), VAR)


class QDilationElem:
    """sum_m c_m x^m with c_m in Q(qh).

    Parameters
    ----------
    coeffs : dict
        Exponent -> coefficient (RationalFn in qh or a rational number).
    window : (lo, hi) or None
        Range of exponents whose coefficients are known; None means exact.
    """

    __slots__ = ("coeffs", "window")

    def __init__(self, coeffs: dict, window=None):
        cs = {}
        for m, c in coeffs.items():
            c = _coerce(c)
            if window is not None and not (window[0] <= m <= window[1]):
                continue
            if not c.is_zero():
                cs[int(m)] = c
        self.coeffs = cs
        self.window = None if window is None else (int(window[0]), int(window[1]))
        if self.window and self.window[0] > self.window[1]:
            raise ValueError(f"empty window {self.window}")

    @classmethod
    def x(cls, n: int = 1):
        return cls({n: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    def __getitem__(self, m):
        if self.window is not None and not (self.window[0] <= m <= self.window[1]):
            raise KeyError(f"coefficient of x^{m} lies outside the window {self.window}")
        return self.coeffs.get(m, RationalFn.const(0, VAR))

    @staticmethod
    def _meet(w1, w2):
        if w1 is None:
            return w2
        if w2 is None:
            return w1
        return (max(w1[0], w2[0]), min(w1[1], w2[1]))

    def __add__(self, o):
        o = _as_elem(o)
        w = self._meet(self.window, o.window)
        out = dict(self.coeffs)
        for m, c in o.coeffs.items():
            out[m] = out[m] + c if m in out else c
        return QDilationElem(out, w)

    __radd__ = __add__

    def __neg__(self):
        return QDilationElem({m: -c for m, c in self.coeffs.items()}, self.window)

    def __sub__(self, o):
        return self + (-_as_elem(o))

    def __rsub__(self, o):
        return _as_elem(o) - self

    def __mul__(self, o):
        o = _as_elem(o)
        if self.window is not None and o.window is not None:
            raise ValueError("product of two windowed elements is not determined")
        a, b = (self, o) if o.window is not None or self.window is None else (o, self)
        # a exact; b possibly windowed
        if b.window is None:
            w = None
        elif not a.coeffs:
            w = b.window
        else:
            w = (b.window[0] + max(a.coeffs), b.window[1] + min(a.coeffs))
            if w[0] > w[1]:
                raise ValueError("window too small for this product")
        out = {}
        for i, c in a.coeffs.items():
            for j, d in b.coeffs.items():
                n = i + j
                if w is not None and not (w[0] <= n <= w[1]):
                    continue
                out[n] = out[n] + c * d if n in out else c * d
        return QDilationElem(out, w)

    __rmul__ = __mul__

    def tau(self, k: int = 1) -> "QDilationElem":
        """x^m -> qh^(k m) x^m; k may be negative."""
        return QDilationElem({m: c * qhat(k * m) for m, c in self.coeffs.items()}, self.window)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, o):
        return isinstance(o, QDilationElem) and self.window == o.window and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.window, tuple(sorted(self.coeffs.items()))))

    def to_json(self):
        return {
            "window": self.window,
            "coeffs": [[m, str(c)] for m, c in sorted(self.coeffs.items())],
        }

    def __repr__(self):
        terms = " + ".join(f"({c})*x^{m}" for m, c in sorted(self.coeffs.items())[:4])
        return f"QDilationElem({terms or '0'}, window={self.window})"


def _as_elem(o) -> QDilationElem:
    if isinstance(o, QDilationElem):
        return o
    return QDilationElem.const(o)
