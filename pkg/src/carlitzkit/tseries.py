"""Truncated power series in t over an arbitrary coefficient ring."""

from __future__ import annotations

__all__ = ["TSeries"]


class TSeries:
    """c_0 + c_1 t + ... + c_{M-1} t^{M-1} + O(t^M).

    The coefficients may be LaurentSeries, RadicalScaled values or anything
    supporting ``+`` and ``*``.  ``zero`` is the additive identity used to pad
    and to start sums.
    """

    __slots__ = ("coeffs", "t_prec", "zero")

    def __init__(self, coeffs, t_prec: int | None = None, zero=None):
        coeffs = list(coeffs)
        if t_prec is None:
            t_prec = len(coeffs)
        if zero is None:
            if not coeffs:
                raise ValueError("an empty TSeries needs an explicit zero")
            zero = coeffs[0] - coeffs[0]
        coeffs = coeffs[:t_prec] + [zero] * (t_prec - len(coeffs))
        self.coeffs = coeffs
        self.t_prec = t_prec
        self.zero = zero

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return self.t_prec

    def _other(self, o):
        if not isinstance(o, TSeries):
            raise TypeError("expected TSeries")
        return o

    def __add__(self, o):
        o = self._other(o)
        M = min(self.t_prec, o.t_prec)
        return TSeries([a + b for a, b in zip(self.coeffs[:M], o.coeffs[:M])], M, self.zero)

    def __sub__(self, o):
        o = self._other(o)
        M = min(self.t_prec, o.t_prec)
        return TSeries([a - b for a, b in zip(self.coeffs[:M], o.coeffs[:M])], M, self.zero)

    def __neg__(self):
        return TSeries([-a for a in self.coeffs], self.t_prec, self.zero)

    def __mul__(self, o):
        if not isinstance(o, TSeries):
            return self.map(lambda c: c * o)
        M = min(self.t_prec, o.t_prec)
        out = []
        for n in range(M):
            acc = None
            for i in range(n + 1):
                term = self.coeffs[i] * o.coeffs[n - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return TSeries(out, M, self.zero)

    def mul_poly(self, poly) -> "TSeries":
        """Multiply by a polynomial in t whose coefficients act on the ring.

        ``poly`` is a list of scalars p_0, p_1, ...; each scalar must support
        ``scalar * coefficient`` via the callback-free ``scale`` protocol: an int
        code is applied with ``coefficient.scale(code)``.
        """
        out = []
        for n in range(self.t_prec):
            acc = self.zero
            for j, pj in enumerate(poly):
                if j > n:
                    break
                if pj:
                    acc = acc + self.coeffs[n - j].scale(pj)
            out.append(acc)
        return TSeries(out, self.t_prec, self.zero)

    def map(self, fn) -> "TSeries":
        return TSeries([fn(c) for c in self.coeffs], self.t_prec, fn(self.zero))

    def shift_t(self, n: int) -> "TSeries":
        """Multiply by t^n."""
        return TSeries([self.zero] * n + self.coeffs[: self.t_prec - n], self.t_prec, self.zero)

    def substitute_power(self, n: int) -> "TSeries":
        """t -> t^n."""
        M = (self.t_prec - 1) * n + 1
        out = [self.zero] * M
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return TSeries(out, M, self.zero)

    def evaluate(self, scale_by_power):
        """sum_i scale_by_power(c_i, i): the caller substitutes t -> xi."""
        acc = self.zero
        for i, c in enumerate(self.coeffs):
            acc = acc + scale_by_power(c, i)
        return acc

    def truncate(self, M: int) -> "TSeries":
        return TSeries(self.coeffs[:M], min(M, self.t_prec), self.zero)

    def to_json(self):
        return {"t_prec": self.t_prec, "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self):
        return f"TSeries(t_prec={self.t_prec}, c0={self.coeffs[0] if self.coeffs else None!r})"
