"""Neumann-series expansions of the q-Dunkl kernel and their ingredients.

Notation (a = alpha, b = beta, Q = q^2, s(n) = floor(n/2)):

  C_n(t)   generalized little q-Gegenbauer C_n^{(b+1/2, a+1/2)}(t; Q)
  w(t)     (t^2 q^2; Q)_inf / (t^2 q^{2b+2}; Q)_inf
  Q_n      w C_n / h_n on [-1, 1], zero outside;  P_n = C_n
  J_n      Neumann function J_{a+b, n}(x; Q)

  E_a(ixt) = (Q;Q)_inf/(q^{2a+2b+2};Q)_inf
             * sum_n i^n q^{-s(n) b} (1 - q^{2a+2b+2n+2}) J_n(x) C_n(t)

The transform identities used to certify the biorthogonal pair are

  F_a(J_n)(t)           = (-i)^n q^{s(n) b} / (1 - q^{2a+2b+2n+2})
                          * (q^{2a+2b+2};Q)_inf/(Q;Q)_inf * Q_n(t)
  F_a(|x|^{2b} J_n)(t)  = (-i)^n q^{-s(n) b} (q^{2a+2};Q)_inf/(q^{2a+2b+2};Q)_inf * C_n(t),  |t| <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .context import QContext, SeriesValue, ensure_context, qpow, to_mp, to_rational, working
from .errors import DomainError, ParameterError, WindowTooSmall
from .lattice import LatticeFunction, LatticePoint
from .measure import interval_integral, line_integral, mu_constant
from .neumann import NeumannSystem, neumann_fn
from .qbessel import bessel_kernel_lattice, bessel_lattice, dunkl_kernel_lattice, rubin_exp
from .qcore import lattice_sum, qpochhammer, qpochhammer_inf_pow
from .qortho import PolyParams, gegenbauer_gen, gegenbauer_norm, gegenbauer_weight, little_q_gegenbauer, little_q_jacobi
from .qtransform import dunkl_transform_fn, hankel_transform_fn
from .report import Case, Report

__all__ = [
    "NeumannSystem",
    "neumann_fn",
    "ExpansionCoefficients",
    "PWSpec",
    "i_minus",
    "i_plus",
    "i_minus_direct",
    "i_plus_direct",
    "biorthogonal_P",
    "biorthogonal_Q",
    "biorthogonality_matrix",
    "lemma_constants",
    "lemma_qFPQ_check",
    "kernel_expansion_partial",
    "kernel_expansion_residuals",
    "plane_wave_partial",
    "plane_wave_residuals",
    "hankel_kernel_partial",
    "hankel_kernel_residuals",
    "pw_synthesize",
    "neumann_reconstruct",
    "coefficient_consistency",
    "beta_probe",
]


@dataclass
class ExpansionCoefficients:
    alpha: Fraction
    beta: Fraction
    q: Fraction
    coeffs: list
    N: int
    sup_error: object = None
    window: tuple = (0, 10)

    def magnitudes(self) -> list:
        return [abs(c) for c in self.coeffs]


@dataclass
class PWSpec:
    u: LatticeFunction
    alpha: Fraction
    q: Fraction

    def __post_init__(self):
        self.alpha = to_rational(self.alpha)
        self.q = to_rational(self.q)
        if not self.alpha > -1:
            raise ParameterError("alpha must exceed -1")
        if not self.u.signed:
            raise ParameterError("the spectrum u lives on the signed [-1, 1] lattice")
        if any(p.k < 0 for p, v in self.u.values.items() if v != 0):
            raise ParameterError("u must be supported on the [-1, 1] lattice (k >= 0)")


def _params(alpha, beta) -> PolyParams:
    return PolyParams(alpha, beta).require_sum()


def _tval(t, q):
    return t.value(to_mp(q)) if isinstance(t, LatticePoint) else to_mp(t)


# ------------------------------------------------------------- I_- and I_+


def _check_t(t: LatticePoint):
    if not isinstance(t, LatticePoint) or t.is_zero or t.sign < 0:
        raise ParameterError("t must be a positive lattice point q^j")


def i_minus(alpha, beta, n: int, t: LatticePoint, q, ctx: QContext | None = None):
    """Closed form of I_-(alpha, beta, n)(t); zero for t > 1."""
    p = _params(alpha, beta)
    _check_t(t)
    if n < 0:
        raise ParameterError("n must be >= 0")
    ctx = ensure_context(q, ctx)
    b, j = p.beta, t.k
    with working(ctx):
        qm = to_mp(q)
        pre = (qpow(qm, n * b) * qpochhammer_inf_pow(2 * b + 2 * n + 2, q, ctx)
               / qpochhammer_inf_pow(2 * n + 2, q, ctx))
        w = qpochhammer_inf_pow(2 * j + 2, q, ctx)
        if w == 0:
            return mp.mpf(0)
        w /= qpochhammer_inf_pow(2 * j + 2 * b + 2, q, ctx)
        return pre * w * little_q_jacobi(n, qm ** (2 * j), p, to_rational(q) ** 2, True, ctx)


def i_plus(alpha, beta, n: int, t: LatticePoint, q, ctx: QContext | None = None):
    """Closed form of I_+(alpha, beta, n)(t) for t in (0, 1]."""
    p = _params(alpha, beta)
    _check_t(t)
    if n < 0:
        raise ParameterError("n must be >= 0")
    if t.k < 0:
        raise DomainError("the I_+ closed form holds only for t in (0, 1]")
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    with working(ctx):
        qm = to_mp(q)
        pre = (qpow(qm, -n * b) * qpochhammer_inf_pow(2 * a + 2 * n + 2, q, ctx)
               / qpochhammer_inf_pow(2 * a + 2 * b + 2 * n + 2, q, ctx))
        return pre * little_q_jacobi(n, qm ** (2 * t.k), p, to_rational(q) ** 2, True, ctx)


def _i_direct(alpha, beta, n: int, t: LatticePoint, q, sign: int, ctx: QContext | None):
    p = _params(alpha, beta)
    _check_t(t)
    ctx = ensure_context(q, ctx)
    a, b, j = p.alpha, p.beta, t.k
    order = a + b + 2 * n + 1
    with working(ctx):
        qm = to_mp(q)
        ex = 1 + sign * b  # x^{-b} for I_-, x^{+b} for I_+

        def term(k):
            v = qpow(qm, ex * k) * bessel_lattice(a, k + j, q, ctx) * bessel_lattice(order, k + n, q, ctx)
            return v, abs(v)

        sv = lattice_sum(term, q, ctx, start=0)
        f = qpow(qm, -a * j)
        return SeriesValue(f * sv.value, f * sv.err_estimate, sv.terms_used)


def i_minus_direct(alpha, beta, n: int, t: LatticePoint, q, ctx: QContext | None = None) -> SeriesValue:
    """Oracle: the defining Jackson integral of I_- summed on the lattice."""
    return _i_direct(alpha, beta, n, t, q, -1, ctx)


def i_plus_direct(alpha, beta, n: int, t: LatticePoint, q, ctx: QContext | None = None) -> SeriesValue:
    """Oracle: the defining Jackson integral of I_+ summed on the lattice."""
    return _i_direct(alpha, beta, n, t, q, 1, ctx)


# ------------------------------------------------------ biorthogonal pair


def biorthogonal_P(n: int, t, alpha, beta, q, ctx: QContext | None = None):
    """P_n = C_n^{(b+1/2, a+1/2)}(t; q^2)."""
    return gegenbauer_gen(n, t, _params(alpha, beta), q, ctx)


def biorthogonal_Q(n: int, t, alpha, beta, q, ctx: QContext | None = None):
    """Q_n = w C_n / h_n on [-1, 1] and zero outside."""
    p = _params(alpha, beta)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        if abs(_tval(t, q)) > 1:
            return mp.mpf(0)
        return (gegenbauer_weight(t, p.beta, q, ctx) * gegenbauer_gen(n, t, p, q, ctx)
                / gegenbauer_norm(n, p, q, ctx))


def biorthogonality_matrix(alpha, beta, q, N: int, ctx: QContext | None = None) -> list:
    """Matrix of integrals of P_n Q_m over [-1, 1] against d mu_{q,alpha}."""
    p = _params(alpha, beta)
    ctx = ensure_context(q, ctx)
    size = N + 1
    extra = 10 + int(N * N * float(mp.log10(1 / to_mp(q))) / 2)
    with working(ctx, extra):
        norms = [gegenbauer_norm(n, p, q, ctx) for n in range(size)]
        cache = {}

        def row(t):
            if t not in cache:
                w = gegenbauer_weight(t, p.beta, q, ctx)
                cache[t] = (w, [gegenbauer_gen(n, t, p, q, ctx) for n in range(size)])
            return cache[t]

        out = []
        for n in range(size):
            line = []
            for m in range(size):
                def g(t, n=n, m=m):
                    w, c = row(t)
                    return c[n] * c[m] * w / norms[m]
                line.append(interval_integral(g, p.alpha, q, ctx).value)
            out.append(line)
    return out


# ------------------------------------------------------------ lemma F-PQ


def lemma_constants(n: int, alpha, beta, q, ctx: QContext | None = None) -> tuple:
    """(cQ_n, cP_n): F(J_n) = cQ_n Q_n and F(|x|^{2b} J_n) = cP_n C_n on [-1, 1]."""
    p = _params(alpha, beta)
    ctx = ensure_context(q, ctx)
    a, b, s = p.alpha, p.beta, n // 2
    with working(ctx):
        qm = to_mp(q)
        ph = (-1j) ** n
        cq = (ph * qpow(qm, s * b) / (1 - qpow(qm, 2 * a + 2 * b + 2 * n + 2))
              * qpochhammer_inf_pow(2 * a + 2 * b + 2, q, ctx) / qpochhammer_inf_pow(2, q, ctx))
        cp = (ph * qpow(qm, -s * b) * qpochhammer_inf_pow(2 * a + 2, q, ctx)
              / qpochhammer_inf_pow(2 * a + 2 * b + 2, q, ctx))
        return mp.mpc(cq), mp.mpc(cp)


def lemma_qFPQ_check(k: int, alpha, beta, q, t_window: tuple[int, int] = (0, 10),
                     ctx: QContext | None = None, tol=None, printed_shift: bool = False) -> Report:
    """Certify both transform identities at t = +-q^j, j in t_window.

    For j < 0 the Q-side must vanish; its residual is measured against the
    largest right-hand side seen inside [-1, 1].  For k = 0 the even identity
    is also checked through the q-Hankel transform.
    """
    p = _params(alpha, beta)
    if k < 0:
        raise ParameterError("k must be >= 0")
    ctx = ensure_context(q, ctx)
    tol = 10.0 ** (-(ctx.precision_digits - 12)) if tol is None else tol
    a, b = p.alpha, p.beta
    nsys = NeumannSystem(a + b, q, max(k, 1), printed_shift)
    report = Report("lemma-qfpq", {"k": k, "alpha": str(a), "beta": str(b), "q": str(to_rational(q)),
                                   "t_window": list(t_window), "precision": ctx.precision_digits},
                    [], {"shift": "printed" if printed_shift else "floor(n/2)"})
    with working(ctx):
        qm = to_mp(q)
        cq, cp = lemma_constants(k, a, b, q, ctx)

        def jn(x: LatticePoint):
            return neumann_fn(nsys, k, x, ctx)

        def jn_w(x: LatticePoint):
            return qpow(qm, 2 * b * x.k) * neumann_fn(nsys, k, x, ctx)

        rows = []
        for j in range(t_window[0], t_window[1] + 1):
            for sign in (1, -1):
                t = LatticePoint(sign, j)
                lq = dunkl_transform_fn(jn, a, q, t, ctx).value
                rq = cq * biorthogonal_Q(k, t, a, b, q, ctx)
                lp = rp = None
                if j >= 0:
                    lp = dunkl_transform_fn(jn_w, a, q, t, ctx).value
                    rp = cp * biorthogonal_P(k, t, a, b, q, ctx)
                rows.append((t, lq, rq, lp, rp))
        scale_q = max([abs(r[2]) for r in rows if r[0].k >= 0] or [mp.mpf(1)])
        for t, lq, rq, lp, rp in rows:
            tag = f"{'+' if t.sign > 0 else '-'}{t.k}"
            if t.k >= 0:
                report.add(Case.make(f"Q/k{k}/t{tag}", lq, rq, tol))
                report.add(Case.make(f"P/k{k}/t{tag}", lp, rp, tol))
            else:
                report.add(Case.make(f"Q/k{k}/t{tag}", lq, 0, tol, scale=scale_q,
                                     note="outside [-1,1]: transform must vanish"))
        if k == 0:
            for j in range(max(t_window[0], 0), t_window[1] + 1):
                h = hankel_transform_fn(lambda x: neumann_fn(nsys, 0, x, ctx), a, q, j, ctx).value
                rq = cq * biorthogonal_Q(0, LatticePoint(1, j), a, b, q, ctx)
                report.add(Case.make(f"H/k0/t+{j}", h, rq, tol, note="even case through the q-Hankel transform"))
    return report


# ------------------------------------------------------- kernel expansions


def _dunkl_prefactor(a, b, q, ctx):
    return qpochhammer_inf_pow(2, q, ctx) / qpochhammer_inf_pow(2 * a + 2 * b + 2, q, ctx)


def _kernel_coeffs(x, a, b, q, N: int, ctx, printed_shift=False) -> list:
    """pref * i^n q^{-s(n) b} (1 - q^{2a+2b+2n+2}) J_n(x) for n <= N."""
    nsys = NeumannSystem(a + b, q, N, printed_shift)
    qm = to_mp(q)
    pref = _dunkl_prefactor(a, b, q, ctx)
    out = []
    for n in range(N + 1):
        s = nsys.shift(n)
        c = (pref * (1j) ** n * qpow(qm, -s * b) * (1 - qpow(qm, 2 * a + 2 * b + 2 * n + 2))
             * neumann_fn(nsys, n, x, ctx))
        out.append(mp.mpc(c))
    return out


def _partial(coeffs, polys) -> SeriesValue:
    total = mp.mpc(0)
    last = mp.mpf(0)
    for c, pv in zip(coeffs, polys):
        term = c * pv
        total += term
        last = abs(term)
    return SeriesValue(total, last, len(coeffs))


def _poly_extra(N: int, q) -> int:
    return 10 + int(N * N * float(mp.log10(1 / to_mp(q))) / 2)


def kernel_expansion_partial(x: LatticePoint, t, alpha, beta, q, N: int, ctx: QContext | None = None,
                             printed_shift: bool = False) -> SeriesValue:
    """Partial sum n <= N of the Neumann expansion of E_alpha(ixt; q^2).

    err_estimate is the magnitude of the last included term.
    """
    p = _params(alpha, beta)
    if N < 0:
        raise ParameterError("N must be >= 0")
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(N, q)):
        coeffs = _kernel_coeffs(x, p.alpha, p.beta, q, N, ctx, printed_shift)
        polys = [gegenbauer_gen(n, t, p, q, ctx) for n in range(N + 1)]
        sv = _partial(coeffs, polys)
        return SeriesValue(+sv.value, +sv.err_estimate, sv.terms_used)


def _l2_residuals(coeffs: list, polys_at, target_at, alpha, q, ctx, rel_tol=mp.mpf(10) ** -20,
                  patience: int = 3, j_max: int = 400) -> tuple[list, object, int]:
    """Discrete L^2([-1,1], d mu_{q,alpha}) norms of target - partial_N for every N.

    ``polys_at(t)`` returns [P_n(t)] and ``target_at(t)`` the exact value at
    the lattice point t.  The walk j = 0, 1, ... stops once the new lattice
    terms are below rel_tol times every accumulated residual (or the
    precision floor) for ``patience`` steps; reaching j_max first raises
    WindowTooSmall.  The cap is separate from the lattice window: partial sums
    are not exact at t = 0, so for small alpha the walk may need many points
    near the origin, all of them cheap.
    Returns (residuals, norm of target, j points used).
    """
    a = to_rational(alpha)
    qm = to_mp(q)
    size = len(coeffs)
    acc = [mp.mpf(0)] * size
    norm = mp.mpf(0)
    step = qpow(qm, 2 * a + 2)
    w = mp.mpf(1)
    streak = 0
    cap = max(j_max, ctx.window[1])
    for j in range(cap + 1):
        new = [mp.mpf(0)] * size
        tn = mp.mpf(0)
        for sign in (1, -1):
            t = LatticePoint(sign, j)
            pv = polys_at(t)
            target = target_at(t)
            tn += abs(target) ** 2 * w
            s = mp.mpc(0)
            for n in range(size):
                s += coeffs[n] * pv[n]
                new[n] += abs(target - s) ** 2 * w
        norm += tn
        # residuals at the precision floor are not resolved further
        floor = norm * mp.mpf(10) ** (-2 * (ctx.precision_digits - 5))
        small = True
        for n in range(size):
            acc[n] += new[n]
            if new[n] > max(rel_tol * acc[n], floor):
                small = False
        if small:
            streak += 1
            if streak >= patience:
                break
        else:
            streak = 0
        w *= step
    else:
        raise WindowTooSmall(f"L^2 residual walk did not settle by j = {cap}")
    c = mu_constant(a, q, ctx) / 2
    return [mp.sqrt(c * v) for v in acc], mp.sqrt(c * norm), j + 1


def kernel_expansion_residuals(x: LatticePoint, alpha, beta, q, N: int, ctx: QContext | None = None,
                               printed_shift: bool = False) -> dict:
    """L^2 residuals over t in [-1, 1] of the partial sums n <= 0..N against E_alpha(ixt)."""
    p = _params(alpha, beta)
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(N, q)):
        coeffs = _kernel_coeffs(x, p.alpha, p.beta, q, N, ctx, printed_shift)

        def polys_at(t):
            return [gegenbauer_gen(n, t, p, q, ctx) for n in range(N + 1)]

        def target_at(t):
            return dunkl_kernel_lattice(p.alpha, x.sign * t.sign, x.k + t.k, q, ctx).value

        res, norm, used = _l2_residuals(coeffs, polys_at, target_at, p.alpha, q, ctx)
    return {"residuals": res, "norm": norm, "points": used}


def _pw_coeffs(x: LatticePoint, b: Fraction, q, N: int, ctx) -> list:
    """Plane-wave coefficients built from J_{b+n} directly (independent of the
    Neumann helper): pref |x|^{-b} i^n q^{-s(b-1/2)} (1 - q^{2b+2n}) J_{b+n}(|x| q^s)."""
    qm = to_mp(q)
    pref = qpochhammer_inf_pow(2, q, ctx) / qpochhammer_inf_pow(2 * b, q, ctx)
    out = []
    for n in range(N + 1):
        s = n // 2
        jv = bessel_lattice(b + n, x.k + s, q, ctx) * qpow(qm, -b * x.k)
        if x.sign < 0 and n % 2:
            jv = -jv
        c = pref * (1j) ** n * qpow(qm, -s * (b - Fraction(1, 2))) * (1 - qpow(qm, 2 * b + 2 * n)) * jv
        out.append(mp.mpc(c))
    return out


def _check_pw_beta(b: Fraction, probe: bool):
    if not b > Fraction(-1, 2):
        raise ParameterError("the plane-wave expansion needs beta > -1/2")
    if b == 0:
        raise ParameterError("beta = 0 makes the prefactor (q^{2 beta}; q^2)_inf vanish")
    if not probe and not b > 0:
        raise ParameterError("beta in (-1/2, 0] lies outside the proven range; use beta_probe")


def plane_wave_partial(x: LatticePoint, t, beta, q, N: int, ctx: QContext | None = None,
                       probe: bool = False) -> SeriesValue:
    """Partial sum n <= N of the q-plane-wave expansion of e(ixt; q^2)."""
    b = to_rational(beta)
    _check_pw_beta(b, probe)
    if N < 0:
        raise ParameterError("N must be >= 0")
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(N, q)):
        coeffs = _pw_coeffs(x, b, q, N, ctx)
        polys = [little_q_gegenbauer(n, t, b, q, ctx) for n in range(N + 1)]
        sv = _partial(coeffs, polys)
        return SeriesValue(+sv.value, +sv.err_estimate, sv.terms_used)


def plane_wave_residuals(x: LatticePoint, beta, q, N: int, ctx: QContext | None = None,
                         probe: bool = False) -> dict:
    """L^2([-1,1], d mu_{q,-1/2}) residuals of the plane-wave partial sums against e(ixt; q^2)."""
    b = to_rational(beta)
    _check_pw_beta(b, probe)
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(N, q)):
        coeffs = _pw_coeffs(x, b, q, N, ctx)
        qm = to_mp(q)

        def polys_at(t):
            return [little_q_gegenbauer(n, t, b, q, ctx) for n in range(N + 1)]

        def target_at(t):
            return rubin_exp(1j * x.value(qm) * t.value(qm), q, ctx).value

        res, norm, used = _l2_residuals(coeffs, polys_at, target_at, Fraction(-1, 2), q, ctx)
    return {"residuals": res, "norm": norm, "points": used}


def _hankel_coeffs(x: LatticePoint, a, b, q, N: int, ctx) -> list:
    qm = to_mp(q)
    pref = qpochhammer_inf_pow(2 * a + 2, q, ctx) / qpochhammer_inf_pow(2 * a + 2 * b + 2, q, ctx)
    c1, c2 = qpow(qm, 2 * a + 2 * b + 2), qpow(qm, 2 * a + 2)
    qq = qm * qm
    out = []
    for n in range(N + 1):
        order = a + b + 2 * n + 1
        # J_{order}(x q^n) / x^{a+b+1}, even in x
        jv = bessel_kernel_lattice(order, x.k + n, q, ctx) * qpow(qm, order * n + x.k * 2 * n)
        c = (pref * qpow(qm, -n * b) * (1 - qpow(qm, 2 * a + 2 * b + 4 * n + 2))
             * qpochhammer(c1, qq, n) / qpochhammer(c2, qq, n) * jv)
        out.append(c)
    return out


def _jacobi_t2(n, t, p, q, ctx):
    tm = _tval(t, q)
    return little_q_jacobi(n, tm * tm, p, to_rational(q) ** 2, True, ctx)


def hankel_kernel_partial(x: LatticePoint, t, alpha, beta, q, N: int, ctx: QContext | None = None) -> SeriesValue:
    """Partial sum n <= N of the expansion of J_alpha(xt; q^2)/(xt)^alpha."""
    p = _params(alpha, beta)
    if N < 0:
        raise ParameterError("N must be >= 0")
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(2 * N, q)):
        coeffs = _hankel_coeffs(x, p.alpha, p.beta, q, N, ctx)
        polys = [_jacobi_t2(n, t, p, q, ctx) for n in range(N + 1)]
        sv = _partial(coeffs, polys)
        return SeriesValue(mp.re(sv.value), sv.err_estimate, sv.terms_used)


def hankel_kernel_residuals(x: LatticePoint, alpha, beta, q, N: int, ctx: QContext | None = None) -> dict:
    """L^2([-1,1], d mu_{q,alpha}) residuals against J_alpha(xt; q^2)/(xt)^alpha."""
    p = _params(alpha, beta)
    ctx = ensure_context(q, ctx)
    with working(ctx, _poly_extra(2 * N, q)):
        coeffs = _hankel_coeffs(x, p.alpha, p.beta, q, N, ctx)

        def polys_at(t):
            return [_jacobi_t2(n, t, p, q, ctx) for n in range(N + 1)]

        def target_at(t):
            return bessel_kernel_lattice(p.alpha, x.k + t.k, q, ctx)

        res, norm, used = _l2_residuals(coeffs, polys_at, target_at, p.alpha, q, ctx)
    return {"residuals": res, "norm": norm, "points": used}


# --------------------------------------------------------- Paley-Wiener


def pw_synthesize(spec: PWSpec, ctx: QContext | None = None, window: tuple[int, int] | None = None,
                  patience: int = 3) -> LatticeFunction:
    """f(t) = integral over [-1, 1] of u(x) E_alpha(ixt) d mu_{q,alpha}(x), on the signed lattice.

    Without an explicit window the upper end is the context's k_max and the
    lower end is found by walking towards large |t| until f is negligible.
    """
    ctx = ensure_context(spec.q, ctx)
    a, q = spec.alpha, spec.q
    support = [(p, v) for p, v in spec.u.values.items() if v != 0]
    with working(ctx):
        qm = to_mp(q)
        c = mu_constant(a, q, ctx) / 2
        masses = {p: qpow(qm, (2 * a + 2) * p.k) for p, _ in support}

        def value(t: LatticePoint):
            s = mp.mpc(0)
            for p, v in support:
                s += v * dunkl_kernel_lattice(a, p.sign * t.sign, p.k + t.k, q, ctx).value * masses[p]
            return c * s

        vals = {}

        def put(k):
            mag = mp.mpf(0)
            for sign in (1, -1):
                t = LatticePoint(sign, k)
                v = value(t) if support else mp.mpc(0)
                if v != 0:
                    vals[t] = v
                mag = max(mag, abs(v))
            return mag

        if window is not None:
            for k in range(window[0], window[1] + 1):
                put(k)
            return LatticeFunction(tuple(window), vals, True)
        k_max = ctx.window[1]
        peak = mp.mpf(0)
        for k in range(0, k_max + 1):
            peak = max(peak, put(k))
        tol = ctx.tail_rel_tol
        k, streak = -1, 0
        while k >= ctx.window[0]:
            mag = put(k)
            peak = max(peak, mag)
            streak = streak + 1 if mag <= tol * peak else 0
            if streak >= patience:
                break
            k -= 1
        else:
            raise WindowTooSmall("synthesized function still significant at the lattice window edge")
        return LatticeFunction((k, k_max), vals, True)


def _neumann_table(a_plus_b, q, N: int, points, ctx) -> dict:
    nsys = NeumannSystem(a_plus_b, q, N)
    return {p: [neumann_fn(nsys, n, p, ctx) for n in range(N + 1)] for p in points}


def neumann_reconstruct(f: LatticeFunction, alpha, beta, q, N: int, ctx: QContext | None = None,
                        window: tuple[int, int] = (0, 10)) -> tuple[ExpansionCoefficients, LatticeFunction]:
    """Coefficients a_n(f), n <= N, and the reconstruction sum a_n (1 - q^{2a+2b+2n+2}) J_n on ``window``.

    a_n = (q^2;q^2)_inf/(q^{2a+2b+2};q^2)_inf * integral over R of f J_n d mu_{q,a+b}.
    The sup error against f over the window is stored on the coefficients.
    """
    p = _params(alpha, beta)
    if N < 0:
        raise ParameterError("N must be >= 0")
    ctx = ensure_context(q, ctx)
    a, b = p.alpha, p.beta
    ab = a + b
    with working(ctx):
        qm = to_mp(q)
        nsys = NeumannSystem(ab, q, N)
        pref = _dunkl_prefactor(a, b, q, ctx)
        coeffs = []
        for n in range(N + 1):
            def g(x, n=n):
                v = f(x)
                return 0 if v == 0 else v * neumann_fn(nsys, n, x, ctx)

            coeffs.append(mp.mpc(pref * line_integral(g, ab, q, ctx, f.window).value))
        vals = {}
        err = mp.mpf(0)
        for k in range(window[0], window[1] + 1):
            for sign in (1, -1):
                x = LatticePoint(sign, k)
                s = mp.mpc(0)
                for n in range(N + 1):
                    s += coeffs[n] * (1 - qpow(qm, 2 * ab + 2 * n + 2)) * neumann_fn(nsys, n, x, ctx)
                vals[x] = s
                if x in f:
                    err = max(err, abs(s - f(x)))
        rec = LatticeFunction(tuple(window), vals, True)
    return ExpansionCoefficients(a, b, to_rational(q), coeffs, N, err, tuple(window)), rec


def coefficient_consistency(spec: PWSpec, beta, N: int, ctx: QContext | None = None,
                            f: LatticeFunction | None = None, tol=None) -> Report:
    """Compare a_n(f) with the biorthogonal coefficient c_n(f) = <f, T_n>.

    With K(x, t) = E_a(ixt): T_n = conj(integral over [-1,1] of P_n(t) K(x, t)),
    S_n = F_a(Q_n) = (-1)^n J_n / cQ_n, so f = sum c_n S_n forces
    c_n (-1)^n / cQ_n = a_n (1 - q^{2a+2b+2n+2}).  S_n = kappa_n J_n is also
    checked at one lattice point.
    """
    ctx = ensure_context(spec.q, ctx)
    p = _params(spec.alpha, beta)
    a, b, q = p.alpha, p.beta, spec.q
    tol = 10.0 ** (-(ctx.precision_digits - 15)) if tol is None else tol
    f = pw_synthesize(spec, ctx) if f is None else f
    coef, _ = neumann_reconstruct(f, a, b, q, N, ctx, window=(0, 0))
    report = Report("pw-coefficients", {"alpha": str(a), "beta": str(b), "q": str(q), "N": N}, [], {})
    with working(ctx):
        qm = to_mp(q)
        for n in range(N + 1):
            cq, _ = lemma_constants(n, a, b, q, ctx)
            pn = {}

            def T_conj(x: LatticePoint):
                def g(t):
                    if t not in pn:
                        pn[t] = biorthogonal_P(n, t, a, b, q, ctx)
                    return pn[t] * dunkl_kernel_lattice(a, x.sign * t.sign, x.k + t.k, q, ctx).value
                return interval_integral(g, a, q, ctx).value

            def integrand(x):
                v = f(x)
                return 0 if v == 0 else v * T_conj(x)

            cn = line_integral(integrand, a, q, ctx, f.window).value
            lhs = cn * (-1) ** n / cq
            rhs = coef.coeffs[n] * (1 - qpow(qm, 2 * a + 2 * b + 2 * n + 2))
            scale = max(abs(rhs), max(abs(c) for c in coef.coeffs) * mp.mpf(10) ** -20)
            report.add(Case.make(f"c_vs_a/n{n}", lhs, rhs, tol, scale=scale))
            x = LatticePoint(1, 1)

            def gs(t):
                return biorthogonal_Q(n, t, a, b, q, ctx) * mp.conj(
                    dunkl_kernel_lattice(a, x.sign * t.sign, x.k + t.k, q, ctx).value)

            sn = interval_integral(gs, a, q, ctx).value
            kappa = (-1) ** n / cq
            jn = neumann_fn(NeumannSystem(a + b, q, N), n, x, ctx)
            report.add(Case.make(f"S_n/n{n}", sn, kappa * jn, tol, note=f"kappa_n = {mp.nstr(kappa, 15)}"))
    return report


def beta_probe(betas, q, x: LatticePoint, N: int, ctx: QContext | None = None) -> list:
    """Plane-wave residual sequences for beta values outside the proven range (report only)."""
    out = []
    for beta in betas:
        b = to_rational(beta)
        try:
            r = plane_wave_residuals(x, b, q, N, ctx, probe=True)
            out.append({"beta": str(b), "residuals": r["residuals"], "norm": r["norm"]})
        except (ParameterError, WindowTooSmall) as exc:
            out.append({"beta": str(b), "error": str(exc)})
    return out
