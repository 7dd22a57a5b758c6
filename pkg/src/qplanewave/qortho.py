"""Little q-Jacobi polynomials, generalized little q-Gegenbauer polynomials,
their norms, Gram-matrix orthogonality checks and the classical Jacobi oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from .context import QContext, ensure_context, qpow, to_mp, to_rational, working
from .errors import ParameterError
from .lattice import LatticePoint
from .measure import interval_integral
from .qcore import basic_hypergeometric, qpochhammer, qpochhammer_inf, qpochhammer_inf_pow

__all__ = [
    "PolyParams",
    "GramReport",
    "little_q_jacobi",
    "gegenbauer_gen",
    "little_q_gegenbauer",
    "gegenbauer_weight",
    "gegenbauer_norm",
    "gegenbauer_norm_direct",
    "jacobi_gram",
    "jacobi_norm_closed",
    "classical_jacobi_oracle",
]


@dataclass(frozen=True)
class PolyParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = to_rational(self.alpha), to_rational(self.beta)
        if not (a > -1 and b > -1):
            raise ParameterError(f"need alpha > -1 and beta > -1, got ({a}, {b})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def require_sum(self):
        if not self.alpha + self.beta > -1:
            raise ParameterError(f"need alpha + beta > -1, got {self.alpha + self.beta}")
        return self


@dataclass
class GramReport:
    size: int
    offdiag_max: object
    diag_rel_err_max: object
    entries: list  # residual matrix: relative off-diagonals, relative diagonal errors
    matrix: list = field(default_factory=list)
    diag_reference: list = field(default_factory=list)

    def passed(self, tol) -> bool:
        return self.offdiag_max < tol and self.diag_rel_err_max < tol


def _xval(x, q):
    return x.value(to_mp(q)) if isinstance(x, LatticePoint) else to_mp(x)


def little_q_jacobi(n: int, x, p: PolyParams, q, normalized: bool = False, ctx: QContext | None = None):
    """p_n(x; q^a, q^b; q), or p_n^{(a,b)}(x; q) when ``normalized``; base q."""
    if n < 0:
        raise ParameterError("polynomial degree must be >= 0")
    ctx = ensure_context(q, ctx)
    with working(ctx, 10):
        qm, xm = to_mp(q), _xval(x, q)
        a, b = p.alpha, p.beta
        if n == 0:
            val = mp.mpf(1)
        else:
            val = basic_hypergeometric([qm ** (-n), qpow(qm, a + b + n + 1)], [qpow(qm, a + 1)],
                                       qm, qm * xm, ctx).value
        if normalized:
            val *= qpow(qm, Fraction(-n) * (a + 1) / 2) * qpochhammer(qpow(qm, a + 1), qm, n) / qpochhammer(qm, qm, n)
        return +val


def gegenbauer_gen(n: int, t, p: PolyParams, q, ctx: QContext | None = None):
    """C_n^{(b+1/2, a+1/2)}(t; q^2) for p = (a, b)."""
    if n < 0:
        raise ParameterError("polynomial degree must be >= 0")
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    with working(ctx, 10):
        qm, tm = to_mp(q), _xval(t, q)
        qq = qm * qm
        m, odd = divmod(n, 2)
        c = qpow(qm, 2 * a + 2 * b + 2)
        d = qpow(qm, 2 * a + 2)
        sign = -1 if m % 2 else 1
        if odd:
            ratio = qpochhammer(c, qq, m + 1) / qpochhammer(d, qq, m + 1)
            val = sign * ratio * tm * little_q_jacobi(m, tm * tm, PolyParams(a + 1, b), qq, True, ctx)
        else:
            ratio = qpochhammer(c, qq, m) / qpochhammer(d, qq, m)
            val = sign * ratio * little_q_jacobi(m, tm * tm, p, qq, True, ctx)
        return +val


def little_q_gegenbauer(n: int, t, beta, q, ctx: QContext | None = None):
    """C_n^beta(t; q^2) = C_n^{(beta, 0)}(t; q^2), i.e. p = (-1/2, beta - 1/2)."""
    return gegenbauer_gen(n, t, PolyParams(Fraction(-1, 2), to_rational(beta) - Fraction(1, 2)), q, ctx)


def gegenbauer_weight(t, beta, q, ctx: QContext | None = None):
    """(t^2 q^2; q^2)_inf / (t^2 q^{2b+2}; q^2)_inf; exact-exponent route on the lattice."""
    ctx = ensure_context(q, ctx)
    b = to_rational(beta)
    with working(ctx):
        if isinstance(t, LatticePoint) and not t.is_zero:
            k = t.k
            return qpochhammer_inf_pow(2 * k + 2, q, ctx) / qpochhammer_inf_pow(2 * b + 2 + 2 * k, q, ctx)
        qm, tm = to_mp(q), _xval(t, q)
        qq = qm * qm
        return (qpochhammer_inf(tm * tm * qq, qq, ctx).value
                / qpochhammer_inf(tm * tm * qpow(qm, 2 * b + 2), qq, ctx).value)


def gegenbauer_norm(n: int, p: PolyParams, q, ctx: QContext | None = None):
    """Closed-form h_n^{(b,a)}: the squared norm of C_n^{(b+1/2,a+1/2)} against the
    weight above and d mu_{q,a} over [-1, 1]."""
    p.require_sum()
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    m, odd = divmod(n, 2)
    with working(ctx):
        qm = to_mp(q)
        qq = qm * qm
        c = qpow(qm, 2 * a + 2 * b + 2)
        d = qpow(qm, 2 * a + 2)
        tail = (qpochhammer_inf_pow(2 * m + 2, q, ctx) * qpochhammer_inf_pow(2 * a + 2 * b + 2, q, ctx)
                / (qpochhammer_inf_pow(2 * b + 2 * m + 2, q, ctx) * qpochhammer_inf_pow(2, q, ctx)))
        if odd:
            lead = 1 / (1 - qpow(qm, 2 * a + 2 * b + 4 * m + 4))
            ratio = qpochhammer(c, qq, m + 1) / qpochhammer(d, qq, m + 1)
        else:
            lead = 1 / (1 - qpow(qm, 2 * a + 2 * b + 4 * m + 2))
            ratio = qpochhammer(c, qq, m) / qpochhammer(d, qq, m)
        return lead * ratio * tail


def gegenbauer_norm_direct(n: int, p: PolyParams, q, ctx: QContext | None = None):
    """h_n by direct lattice summation over [-1, 1] (oracle)."""
    ctx = ensure_context(q, ctx)

    def g(t: LatticePoint):
        return gegenbauer_gen(n, t, p, q, ctx) ** 2 * gegenbauer_weight(t, p.beta, q, ctx)

    return interval_integral(g, p.alpha, q, ctx).value


def jacobi_norm_closed(n: int, p: PolyParams, q, ctx: QContext | None = None):
    """Right-hand side of the q^2-rewritten little q-Jacobi orthogonality at m = n."""
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    with working(ctx):
        qm = to_mp(q)
        num = qpochhammer_inf_pow(2 * n + 2, q, ctx) * qpochhammer_inf_pow(2 * a + 2 * b + 2 * n + 2, q, ctx)
        den = qpochhammer_inf_pow(2 * a + 2 * n + 2, q, ctx) * qpochhammer_inf_pow(2 * b + 2 * n + 2, q, ctx)
        return (1 - qm) / (1 - qpow(qm, 2 * a + 2 * b + 4 * n + 2)) * num / den


def jacobi_gram(p: PolyParams, q, N: int, ctx: QContext | None = None) -> GramReport:
    """Gram matrix of p_n^{(a,b)}(x^2; q^2), n <= N, against
    (q^2x^2; q^2)_inf/(q^{2b+2}x^2; q^2)_inf x^{2a+1} d_q x on (0, 1]."""
    if N < 0:
        raise ParameterError("N must be >= 0")
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    qq_r = to_rational(q) ** 2
    size = N + 1
    # p_N(x^2; q^2) has alternating terms up to about q^{-N^2}
    extra = 10 + int(N * N * float(mp.log10(1 / to_mp(q))))
    with working(ctx, extra):
        qm = to_mp(q)
        qq = qm * qm
        # accumulate all entries in one pass over the lattice x = q^j
        G = [[mp.mpf(0)] * size for _ in range(size)]
        tol = ctx.tail_rel_tol
        peak, streak = mp.mpf(0), 0
        step = qpow(qm, 2 * a + 2)
        scale = mp.mpf(1)  # q^{j(2a+2)} = x^{2a+1} * q^j
        for j in range(ctx.max_terms):
            w = (qpochhammer_inf(qm ** (2 * j + 2), qq, ctx).value
                 / qpochhammer_inf(qpow(qm, 2 * b + 2 + 2 * j), qq, ctx).value)
            x2 = qm ** (2 * j)
            vals = [little_q_jacobi(n, x2, p, qq_r, True, ctx) for n in range(size)]
            mag = mp.mpf(0)
            for n in range(size):
                for m in range(n, size):
                    t = w * vals[n] * vals[m] * scale
                    G[n][m] += t
                    if n == m:
                        mag = max(mag, abs(t))
            peak = max(peak, mag)
            if mag <= tol * peak:
                streak += 1
                if streak >= 3:
                    break
            else:
                streak = 0
            scale *= step
        for n in range(size):
            for m in range(n, size):
                G[n][m] *= 1 - qm
                G[m][n] = G[n][m]
        ref = [jacobi_norm_closed(n, p, q, ctx) for n in range(size)]
        resid = [[mp.mpf(0)] * size for _ in range(size)]
        off, diag = mp.mpf(0), mp.mpf(0)
        for n in range(size):
            for m in range(size):
                if n == m:
                    r = abs(G[n][n] - ref[n]) / abs(ref[n])
                    diag = max(diag, r)
                else:
                    r = abs(G[n][m]) / mp.sqrt(abs(G[n][n] * G[m][m]))
                    off = max(off, r)
                resid[n][m] = r
    return GramReport(size, off, diag, resid, G, ref)


def classical_jacobi_oracle(n: int, y, alpha, beta):
    """Classical Jacobi polynomial P_n^{(a,b)}(y) by the three-term recurrence."""
    if n < 0:
        raise ParameterError("degree must be >= 0")
    a, b, y = mp.mpf(alpha), mp.mpf(beta), mp.mpf(y)
    p0 = mp.mpf(1)
    if n == 0:
        return p0
    p1 = (a + 1) + (a + b + 2) * (y - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * y + a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
    return p1
