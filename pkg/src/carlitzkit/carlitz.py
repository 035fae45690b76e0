"""The generalized Carlitz module of a difference ring.

Given a ring K with endomorphism tau and an element vartheta that is not
tau-periodic, the higher derivations

    E_0(z) = z,   E_k(z) = (tau E_{k-1}(z) - E_{k-1}(z)) / (tau^k vartheta - vartheta)

assemble into phi(z) = sum_k (+-1)^k E_k(z) tau^k.  The sign is ``(-1)^k`` in
the OLD convention (phi(vartheta) = vartheta - tau) and ``+1`` in the NEW one
(phi(theta) = theta + tau, Carlitz's normalisation).
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction

from .report import FAIL, PASS, CheckRecord, compare_series
from .qdilation import VAR as QVAR
from .qdilation import QDilationElem, qhat
from .skew import QDilationRing, ShiftRing, SkewOperator, apply, skew_mul
from .ratfunc import Poly, RationalFn

__all__ = [
    "CarlitzContext",
    "Convention",
    "PeriodicityError",
    "akhiezer_baker_check",
    "casoratian",
    "check_coherent",
    "exp_log_coeffs",
    "exp_log_identities",
    "leibniz_check",
    "exp_operators",
    "jacobi_theta_checks",
    "theta_coefficient",
    "theta_series",
    "phi_inverse_s",
    "poly_phi_table",
    "shift_context",
]


class PeriodicityError(ArithmeticError):
    """tau^k(vartheta) == vartheta for some k in the range used."""


class Convention(enum.Enum):
    OLD = "old"
    NEW = "new"

    @property
    def eps(self) -> int:
        """phi(vartheta) = vartheta + eps * tau."""
        return -1 if self is Convention.OLD else 1


class CarlitzContext:
    """Ring, vartheta and sign convention, with cached tau^k(vartheta) - vartheta.

    Parameters
    ----------
    ring : ring adapter (see :mod:`carlitzkit.skew`)
    vartheta : ring element
    convention : Convention
    cache_to : int
        Differences tau^k(vartheta) - vartheta are computed on first use and
        kept for k <= cache_to; larger k are recomputed each time.
    """

    def __init__(self, ring, vartheta, convention=Convention.OLD, cache_to: int = 8):
        self.ring = ring
        self.vartheta = vartheta
        self.convention = Convention(convention)
        self._cache_to = cache_to
        self._diffs: dict = {}
        self._diff(1)  # fails fast on a periodic vartheta

    def _diff(self, k):
        r = self.ring
        d = r.sub(r.tau(self.vartheta, k), self.vartheta)
        if r.is_zero(d):
            raise PeriodicityError(f"tau^{k}(vartheta) = vartheta: vartheta is periodic")
        return d

    def denom(self, k: int):
        """tau^k(vartheta) - vartheta (k >= 1)."""
        d = self._diffs.get(k)
        if d is None:
            d = self._diff(k)
            if k <= self._cache_to:
                self._diffs[k] = d
        return d

    @property
    def eps(self):
        return self.convention.eps

    def sign(self, k):
        return 1 if self.eps == 1 or k % 2 == 0 else -1

    # -- higher derivations -------------------------------------------------------
    def higher_derivations(self, z, kmax: int) -> list:
        """[E_0(z), ..., E_kmax(z)], stopping early once an E_k is exactly 0."""
        r = self.ring
        out = [z]
        for k in range(1, kmax + 1):
            prev = out[-1]
            if r.is_exact_zero(prev):
                out.append(prev)
                continue
            out.append(r.div(r.sub(r.tau(prev), prev), self.denom(k)))
        return out

    def higher_derivation(self, z, k: int):
        if k < 0:
            raise ValueError("k must be >= 0")
        return self.higher_derivations(z, k)[k]

    def phi(self, z, order: int = 8) -> SkewOperator:
        """phi(z); exact polynomial when some E_k(z) vanishes exactly."""
        r = self.ring
        Es = self.higher_derivations(z, order + 1)
        for k, e in enumerate(Es):
            if r.is_exact_zero(e):
                cs = [self._signed(k2, Es[k2]) for k2 in range(k)]
                return SkewOperator(r, cs)
        cs = [self._signed(k, Es[k]) for k in range(order + 1)]
        return SkewOperator(r, cs, trunc=order)

    def _signed(self, k, e):
        return e if self.sign(k) == 1 else self.ring.neg(e)

    def phi_vartheta(self) -> SkewOperator:
        """vartheta + eps*tau, built directly."""
        r = self.ring
        t = r.one() if self.eps == 1 else r.neg(r.one())
        return SkewOperator(r, [self.vartheta, t])

    def poly_in_vartheta(self, coeffs):
        """sum_j coeffs[j] vartheta^j for constant coefficients (ring elements)."""
        r = self.ring
        acc, pw = r.zero(), r.one()
        for c in coeffs:
            acc = r.add(acc, r.mul(c, pw))
            pw = r.mul(pw, self.vartheta)
        return acc


def leibniz_check(ctx: CarlitzContext, x, y, kmax: int) -> CheckRecord:
    """E_k(xy) = sum_{i+j=k} E_i(x) tau^i(E_j(y)) for k <= kmax."""
    r = ctx.ring
    Ex = ctx.higher_derivations(x, kmax)
    Ey = ctx.higher_derivations(y, kmax)
    Exy = ctx.higher_derivations(r.mul(x, y), kmax)
    prec = None
    for k in range(kmax + 1):
        acc = r.zero()
        for i in range(k + 1):
            acc = r.add(acc, r.mul(Ex[i], r.tau(Ey[k - i], i)))
        ag = r.agrees(Exy[k], acc)
        if ag.prec is not None:
            prec = ag.prec if prec is None else min(prec, ag.prec)
        if not ag.ok:
            return CheckRecord("leibniz", FAIL, k, prec, {"first_bad_k": k})
    return CheckRecord("leibniz", PASS, None, "exact" if prec is None else prec, {"kmax": kmax})


def _det(ring, M):
    """Determinant by the permutation expansion (small n, any commutative ring)."""
    n = len(M)
    acc = ring.zero()
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = ring.one()
        for i in range(n):
            term = ring.mul(term, M[i][perm[i]])
        acc = ring.sub(acc, term) if inv % 2 else ring.add(acc, term)
    return acc


def casoratian(ctx: CarlitzContext, zs) -> dict:
    """det(E_{i-1}(z_j)), det(tau^{i-1}(z_j)) and F_n with det(E) * F_n = det(tau)."""
    zs = list(zs)
    n = len(zs)
    if n < 2:
        raise ValueError("casoratian needs at least two elements")
    r = ctx.ring
    E = [ctx.higher_derivations(z, n - 1) for z in zs]
    ME = [[E[j][i] for j in range(n)] for i in range(n)]
    MT = [[r.tau(z, i) for z in zs] for i in range(n)]
    det_e = _det(r, ME)
    det_t = _det(r, MT)
    F = r.one()
    tv = [r.tau(ctx.vartheta, i) for i in range(n)]
    for i in range(n - 1):
        for j in range(1, n - i):
            F = r.mul(F, r.sub(tv[i + j] if i + j < n else r.tau(ctx.vartheta, i + j), tv[i]))
    ag = r.agrees(r.mul(det_e, F), det_t)
    return {"det_E": det_e, "det_tau": det_t, "F_n": F, "identity": ag}


def check_coherent(ctx: CarlitzContext, seq, zring=None) -> list:
    """Residuals of phi(vartheta) x_1 = 0 and phi(vartheta) x_i = x_{i-1}."""
    zring = zring or ctx.ring
    seq = list(seq)
    if not seq or zring.is_zero(seq[0]):
        return [CheckRecord("coherent[x1!=0]", FAIL, 1, None, {"reason": "x_1 is zero"})]
    op = ctx.phi_vartheta()
    recs = []
    prev = None
    for i, x in enumerate(seq, start=1):
        lhs = apply(op, x, zring)
        rhs = zring.sub(x, x) if prev is None else prev
        recs.append(compare_series(f"coherent[{i}]", zring.agrees(lhs, rhs)))
        prev = x
    return recs


def akhiezer_baker_check(ctx: CarlitzContext, seq, a_coeffs, t_prec: int, zring=None) -> CheckRecord:
    """phi(a) omega_Xi = a(t) omega_Xi with omega_Xi = sum_i x_{i+1} t^i.

    ``a_coeffs`` are the constant coefficients of a as ring elements (low to
    high); a(t) multiplies through ``zring.act``.
    """
    seq = list(seq)
    zring = zring or ctx.ring
    if len(seq) < t_prec:
        raise ValueError(f"sequence of length {len(seq)} < t_prec {t_prec}")
    a = ctx.poly_in_vartheta(a_coeffs)
    op = ctx.phi(a, order=len(a_coeffs))
    first, prec = None, None
    for m in range(t_prec):
        lhs = apply(op, seq[m], zring)
        rhs = None
        for j, c in enumerate(a_coeffs):
            if j > m:
                break
            term = zring.act(c, seq[m - j])
            rhs = term if rhs is None else zring.add(rhs, term)
        ag = zring.agrees(lhs, rhs)
        if ag.prec is not None:
            prec = ag.prec if prec is None else min(prec, ag.prec)
        if not ag.ok and first is None:
            first = m
    return CheckRecord(
        "akhiezer-baker",
        PASS if first is None else FAIL,
        first,
        "exact" if prec is None else prec,
        {"t_prec": t_prec, "deg_a": len(a_coeffs) - 1},
    )


def exp_log_coeffs(ctx: CarlitzContext, n_max: int) -> tuple[list, list]:
    """d_0..d_n and l_0..l_n from the recursions.

    d_n = eps (tau^n vartheta - vartheta) tau(d_{n-1}),
    l_n = eps (vartheta - tau^n vartheta) l_{n-1},
    so that E = sum d_n^{-1} tau^n and L = sum l_n^{-1} tau^n satisfy
    phi(z) E = E z and L phi(z) = z L.
    """
    r = ctx.ring
    eps = ctx.eps
    d = [r.one()]
    l_ = [r.one()]
    for n in range(1, n_max + 1):
        diff = ctx.denom(n)
        dn = r.mul(diff, r.tau(d[-1]))
        ln = r.mul(diff, l_[-1])
        if eps == 1:
            ln = r.neg(ln)
        else:
            dn = r.neg(dn)
        d.append(dn)
        l_.append(ln)
    return d, l_


def exp_operators(ctx: CarlitzContext, n_max: int, ring=None):
    """E and L as truncated skew series (coefficients 1/d_n, 1/l_n)."""
    ring = ring or ctx.ring
    d, l_ = exp_log_coeffs(ctx, n_max)
    one = ring.one()
    E = SkewOperator(ring, [ring.div(one, x) for x in d], trunc=n_max)
    L = SkewOperator(ring, [ring.div(one, x) for x in l_], trunc=n_max)
    return E, L


def _series_identity(name, lhs_scaled, rhs, ring, min_rel=None):
    lhs, scales = lhs_scaled
    ag = lhs.agrees(rhs)
    details = {}
    rel = None
    if ag.prec is not None:
        rels = []
        for k, s in enumerate(scales):
            if s is None:
                continue
            ak = ring.agrees(lhs.coefficient(k), rhs.coefficient(k))
            if ak.prec is not None:
                rels.append(ak.prec - s)
        rel = min(rels) if rels else None
        details["relative_precision"] = rel
    rec = compare_series(name, ag, **details)
    if rec.status == PASS and min_rel is not None and rel is not None and rel < min_rel:
        rec.status = FAIL
        rec.details["shortfall"] = f"relative precision {rel} < {min_rel}"
    return rec


def exp_log_identities(ctx: CarlitzContext, tau_order: int, samples=(), ring=None, min_rel=None) -> list:
    """EL = LE = 1, phi(z) E = E z, L phi(z) = z L and phi(z) = E z L.

    ``ring`` may be a precision-capped copy of the context ring used for the
    series products; ``samples`` are elements z whose phi is computed exactly
    in the context ring (polynomials in vartheta).
    """
    ring = ring or ctx.ring
    E, L = exp_operators(ctx, tau_order, ring)
    one = SkewOperator.identity(ring, trunc=tau_order)
    recs = [
        _series_identity("EL=1", skew_mul(E, L, True), one, ring, min_rel),
        _series_identity("LE=1", skew_mul(L, E, True), one, ring, min_rel),
    ]
    for idx, z in enumerate(samples):
        ph = ctx.phi(z, order=tau_order)
        ph = SkewOperator(ring, ph.coeffs, trunc=tau_order)
        zop = SkewOperator.scalar(ring, z, trunc=tau_order)
        recs.append(_series_identity(f"phi(z{idx})E=Ez{idx}", skew_mul(ph, E, True), skew_mul(E, zop), ring, min_rel))
        recs.append(_series_identity(f"Lphi(z{idx})=z{idx}L", skew_mul(L, ph, True), skew_mul(zop, L), ring, min_rel))
        ezl = skew_mul(skew_mul(E, zop), L, True)
        recs.append(_series_identity(f"phi(z{idx})=E z{idx} L", ezl, ph, ring, min_rel))
    return recs


def exp_log_duality(ctx, n_max, ring=None):
    """sum_{i+j=n} d_i^{-1} tau^i(l_j^{-1}) for n = 0..n_max (should be [1, 0, ...])."""
    ring = ring or ctx.ring
    E, L = exp_operators(ctx, n_max, ring)
    return skew_mul(E, L).coeffs


# -- the Q(s) layer ---------------------------------------------------------------------


def shift_context(convention=Convention.OLD, cache_to: int = 12) -> CarlitzContext:
    """Q(s), tau f(s) = f(s+1), vartheta = s."""
    ring = ShiftRing("s")
    return CarlitzContext(ring, ring.variable(), convention, cache_to)


def rising(s_poly_var="s", j=0) -> Poly:
    """s (s+1) ... (s+j)."""
    p = Poly.const(1)
    for i in range(j + 1):
        p = p * Poly((i, 1))
    return p


def falling(j=0) -> Poly:
    """s (s-1) ... (s-j)."""
    p = Poly.const(1)
    for i in range(j + 1):
        p = p * Poly((-i, 1))
    return p


def phi_inverse_s(order: int) -> dict:
    """phi(1/s) in the OLD convention, compared with Pochhammer patterns.

    Returns the computed coefficients together with, per tau-order, which of
    +-1/(rising) and +-1/(falling) they equal.
    """
    ctx = shift_context(Convention.OLD)
    s = ctx.vartheta
    op = ctx.phi(RationalFn.const(1) / s, order)
    rows = []
    for k, c in enumerate(op.coeffs):
        cand = {
            "+1/rising": RationalFn(Poly.const(1), rising(j=k)),
            "-1/rising": RationalFn(Poly.const(-1), rising(j=k)),
            "+1/falling": RationalFn(Poly.const(1), falling(j=k)),
            "-1/falling": RationalFn(Poly.const(-1), falling(j=k)),
        }
        matches = sorted(name for name, v in cand.items() if v == c)
        rows.append({"k": k, "coefficient": str(c), "matches": matches})
    return {"operator": op, "rows": rows}


def poly_phi_table(max_deg: int, convention=Convention.OLD) -> dict:
    """phi(s^n) for n <= max_deg as lists of coefficients (exact)."""
    ctx = shift_context(convention)
    s = ctx.vartheta
    return {n: ctx.phi(s**n, n + 1).coeffs for n in range(max_deg + 1)}


def as_rational(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    return RationalFn.const(Fraction(x))


# -- q-dilation: theta series ---------------------------------------------------------


def theta_coefficient(m: int, n: int) -> RationalFn:
    """d_m^[n] = qh^(-m(m+2n+1)/2) prod_{i=1}^n (qh^(i+m) - 1)/(qh^i - 1)."""
    e = m * (m + 2 * n + 1)
    out = qhat(-(e // 2))
    one = RationalFn.const(1, QVAR)
    for i in range(1, n + 1):
        out = out * (qhat(i + m) - one) / (qhat(i) - one)
    return out


def theta_series(n: int, M: int, signed: bool = True) -> QDilationElem:
    """x_{n+1} on the exponent window [-M, M].

    With ``signed`` the displayed coefficients are multiplied by (-1)^n; the
    unsigned series satisfy phi(x) x_{n+1} = -x_n instead of x_n.
    """
    sg = -1 if signed and n % 2 else 1
    return QDilationElem({m: theta_coefficient(m, n) * sg for m in range(-M, M + 1)}, (-M, M))


def jacobi_theta_checks(M: int = 12, n_max: int = 3) -> list:
    """phi(x) x_1 = 0 and phi(x) x_{n+1} = x_n (OLD convention, vartheta = x).

    Also audits the unsigned coefficient display: there phi(x) x_{n+1} = -x_n.
    """
    if M < 2:
        raise ValueError("window too small: need M >= 2")
    ring = QDilationRing()
    ctx = CarlitzContext(ring, ring.variable(), Convention.OLD, cache_to=1)
    phix = ctx.phi_vartheta()
    out = []
    for signed in (True, False):
        xs = [theta_series(n, M, signed) for n in range(n_max + 1)]
        for n in range(n_max + 1):
            img = apply(phix, xs[n], ring)
            if n == 0:
                target = QDilationElem({}, img.window)
            else:
                target = xs[n - 1] if signed else -xs[n - 1]
            diff = img - target
            bad = sorted(diff.coeffs)
            rhs = "0" if n == 0 else (f"x_{n}" if signed else f"-x_{n}")
            label = "" if signed else " (unsigned display)"
            out.append(CheckRecord(
                f"phi(x) x_{n + 1} = {rhs}{label}",
                PASS if not bad else FAIL,
                bad[0] if bad else None,
                "exact",
                {"window": list(diff.window), "M": M},
            ))
    return out
