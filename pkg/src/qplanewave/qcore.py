"""q-Pochhammer symbols, basic hypergeometric series and Jackson q-integrals.

Truncated infinite series and products report a heuristic error: the size of
the first neglected term times the geometric majorant 1/(1 - rho), where rho
is q or the observed term ratio, whichever is larger.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath as mp

from .context import QContext, SeriesValue, ensure_context, to_mp, to_rational, working
from .errors import DivergentSeries, NonConvergent, ParameterError, PoleInParameters, WindowTooSmall
from .report import Case, Report

__all__ = [
    "qpochhammer",
    "qpochhammer_inf",
    "qpochhammer_inf_pow",
    "basic_hypergeometric",
    "q_integral",
    "lattice_sum",
    "hypergeometric_transform_check",
    "DOMAINS",
]


def qpochhammer(a, q, n: int):
    """Finite product (a; q)_n = prod_{k<n} (1 - a q^k); (a; q)_0 = 1."""
    if n < 0:
        raise ParameterError(f"qpochhammer needs n >= 0, got {n}")
    a, q = to_mp(a), to_mp(q)
    p = mp.mpf(1)
    qk = mp.mpf(1)
    for _ in range(n):
        p *= 1 - a * qk
        qk *= q
    return p


def _is_one(x, ctx: QContext) -> bool:
    return abs(x - 1) <= mp.mpf(10) ** (-(ctx.precision_digits - 5))


def qpochhammer_inf(a, q, ctx: QContext | None = None) -> SeriesValue:
    """(a; q)_inf truncated once |a| q^N < tail_rel_tol.

    A factor equal to zero (a = q^{-k}) within working tolerance makes the
    product exactly zero.
    """
    ctx = ensure_context(q, ctx)
    with working(ctx):
        a, q = to_mp(a), to_mp(q)
        if not 0 < abs(q) < 1:
            raise ParameterError("(a; q)_inf requires |q| < 1")
        if a == 0:
            return SeriesValue(mp.mpf(1), mp.mpf(0), 0)
        tol = ctx.tail_rel_tol
        p = mp.mpf(1)
        aqk = a
        for n in range(ctx.max_terms):
            if abs(aqk) < tol:
                err = abs(p) * abs(aqk) / (1 - abs(q))
                return SeriesValue(p, err, n)
            if _is_one(aqk, ctx):
                return SeriesValue(mp.mpf(0), mp.mpf(0), n + 1)
            p *= 1 - aqk
            aqk *= q
        raise NonConvergent(f"(a; q)_inf: |a| q^N still {mp.nstr(abs(aqk), 5)} after {ctx.max_terms} factors")


@lru_cache(maxsize=4096)
def _pinf_pow(c: Fraction, step: int, q: Fraction, ctx: QContext):
    with working(ctx, 10, pin=True):
        qm = to_mp(q)
        return qpochhammer_inf(mp.power(qm, to_mp(c)), qm**step, ctx).value


def qpochhammer_inf_pow(c, q, ctx: QContext | None = None, step: int = 2):
    """(q^c; q^step)_inf for exact rational c, memoized per (c, step, q, ctx)."""
    ctx = ensure_context(q, ctx)
    return _pinf_pow(to_rational(c), int(step), to_rational(q), ctx)


def _terminating_index(a, q, ctx: QContext):
    """m if a equals q^{-m} (m >= 0) within working tolerance, else None."""
    if a == 0 or mp.im(a) != 0 or mp.re(a) <= 0:
        return None
    m = -mp.log(mp.re(a)) / mp.log(q)
    mi = int(mp.nint(m))
    if mi < 0:
        return None
    if abs(a * q**mi - 1) <= mp.mpf(10) ** (-(ctx.precision_digits - 8)):
        return mi
    return None


def _hyper_sum(upper, lower, q, z, ctx: QContext, n_terms: int | None = None):
    """Sum s_phi_r; returns (SeriesValue, largest term magnitude)."""
    s, r = len(upper), len(lower)
    power = r - s + 1
    t = mp.mpf(1)
    total = mp.mpf(0)
    max_term = mp.mpf(1)
    tol = ctx.tail_rel_tol
    limit = n_terms if n_terms is not None else ctx.max_terms
    qn = mp.mpf(1)
    for n in range(limit):
        total += t
        at = abs(t)
        if at > max_term:
            max_term = at
        num = mp.mpf(1)
        for a in upper:
            num *= 1 - a * qn
        den = 1 - qn * q
        for b in lower:
            den *= 1 - b * qn
        nxt = t * num / den * z
        if power:
            nxt *= (-qn) ** power
        qn *= q
        if n_terms is not None:
            t = nxt
            continue
        an = abs(nxt)
        scale = abs(total) if total != 0 else max_term
        if an <= tol * scale:
            ratio = an / at if at != 0 else mp.mpf(0)
            if ratio < 1:
                rho = max(abs(q), ratio)
                return SeriesValue(total, an / (1 - rho), n + 1), max_term
        t = nxt
    if n_terms is not None:
        return SeriesValue(total, mp.mpf(0), n_terms), max_term
    raise NonConvergent(f"{s}phi{r} did not converge within {limit} terms")


def basic_hypergeometric(s_params: Sequence, r_params: Sequence, q, z,
                         ctx: QContext | None = None) -> SeriesValue:
    """The series s_phi_r(a_1..a_s; b_1..b_r | q; z).

    Uses the normalisation with the factor ((-1)^n q^{n(n-1)/2})^{r-s+1}.
    Terminating series (some a_i = q^{-m}) are summed exactly in m + 1 terms.
    """
    ctx = ensure_context(q, ctx)
    with working(ctx):
        q = to_mp(q)
        upper = [to_mp(a) for a in s_params]
        lower = [to_mp(b) for b in r_params]
        z = to_mp(z)
        if not 0 < abs(q) < 1:
            raise ParameterError("basic hypergeometric series need 0 < |q| < 1")
        term_idx = [m for m in (_terminating_index(a, q, ctx) for a in upper) if m is not None]
        m_term = min(term_idx) if term_idx else None
        for b in lower:
            mb = _terminating_index(b, q, ctx)
            if b == 0 or (mb is not None and (m_term is None or mb < m_term)):
                raise PoleInParameters(f"lower parameter {mp.nstr(b, 8)} equals q^-{mb}")
        if z == 0:
            return SeriesValue(mp.mpf(1), mp.mpf(0), 1)
        if m_term is not None:
            val, _ = _hyper_sum(upper, lower, q, z, ctx, n_terms=m_term + 1)
            return val
        s, r = len(upper), len(lower)
        if s > r + 1:
            raise DivergentSeries(f"{s}phi{r} with s > r + 1 diverges unless it terminates")
        if s == r + 1 and abs(z) >= 1:
            raise DivergentSeries(f"{s}phi{r} needs |z| < 1, got |z| = {mp.nstr(abs(z), 8)}")
        val, _ = _hyper_sum(upper, lower, q, z, ctx)
        return val


DOMAINS = ("(0,a]", "[-a,a]", "(0,inf)", "R")


def lattice_sum(term: Callable[[int], tuple], q, ctx: QContext, window: tuple[int, int] | None = None,
                start: int = 0, patience: int = 3) -> SeriesValue:
    """Sum term(k) over k in the window, walking outwards from ``start``.

    ``term`` returns (value, magnitude).  Each direction stops early after
    ``patience`` consecutive non-increasing terms below tail_rel_tol times the
    largest magnitude seen (leading zero terms do not count); reaching the
    window edge with a non-negligible term raises WindowTooSmall.
    """
    k_min, k_max = window if window is not None else ctx.window
    start = min(max(start, k_min), k_max)
    tol = ctx.tail_rel_tol
    q = to_mp(q)
    total = mp.mpf(0)
    peak = mp.mpf(0)
    used = 0
    tails = []
    for direction in (1, -1):
        k = start if direction == 1 else start - 1
        end = k_max if direction == 1 else k_min
        streak, prev, last = 0, None, mp.mpf(0)
        stopped = False
        while (k <= end) if direction == 1 else (k >= end):
            v, mag = term(k)
            total += v
            used += 1
            peak = max(peak, mag)
            last = mag
            if peak > 0 and mag <= tol * peak and (prev is None or mag <= prev):
                streak += 1
                if streak >= patience:
                    stopped = True
                    break
            else:
                streak = 0
            prev = mag
            k += direction
        if not stopped and last > tol * peak and peak != 0:
            side = "small-x" if direction == 1 else "large-x"
            raise WindowTooSmall(
                f"{side} boundary term {mp.nstr(last, 5)} exceeds tolerance relative to "
                f"{mp.nstr(peak, 5)} in window ({k_min}, {k_max})")
        tails.append(last)
    err = sum(tails) / (1 - q)
    return SeriesValue(total, err, used)


def q_integral(f: Callable, domain: str, q, ctx: QContext | None = None, *, a=1,
               window: tuple[int, int] | None = None) -> SeriesValue:
    """Jackson q-integral of f.

    domain "(0,a]":  (1-q) a sum_{n>=0} f(a q^n) q^n
    domain "[-a,a]": same with f(x) + f(-x)
    domain "(0,inf)": (1-q) sum_{k in window} f(q^k) q^k
    domain "R":      same over +-q^k
    """
    ctx = ensure_context(q, ctx)
    if domain not in DOMAINS:
        raise ParameterError(f"unknown q-integral domain {domain!r}; expected one of {DOMAINS}")
    with working(ctx):
        q = to_mp(q)
        if not 0 < q < 1:
            raise ParameterError("q-integrals need 0 < q < 1")
        if domain in ("(0,a]", "[-a,a]"):
            a = to_mp(a)
            both = domain == "[-a,a]"

            def term(n):
                x = a * q**n
                w = q**n
                if both:
                    fp, fm = f(x), f(-x)
                    return (fp + fm) * w, (abs(fp) + abs(fm)) * w
                v = f(x)
                return v * w, abs(v) * w

            sv = _one_sided(term, q, ctx)
            return SeriesValue((1 - q) * a * sv.value, (1 - q) * abs(a) * sv.err_estimate, sv.terms_used)

        both = domain == "R"

        def term(k):
            x = q**k
            if both:
                fp, fm = f(x), f(-x)
                return (fp + fm) * x, (abs(fp) + abs(fm)) * x
            v = f(x)
            return v * x, abs(v) * x

        sv = lattice_sum(term, q, ctx, window)
        return SeriesValue((1 - q) * sv.value, (1 - q) * sv.err_estimate, sv.terms_used)


def _one_sided(term, q, ctx: QContext, patience: int = 3, min_terms: int = 32) -> SeriesValue:
    tol = ctx.tail_rel_tol
    total = mp.mpf(0)
    peak = mp.mpf(0)
    streak = 0
    prev = None
    for n in range(ctx.max_terms):
        v, mag = term(n)
        total += v
        peak = max(peak, mag)
        if (mag <= tol * peak and (prev is None or mag <= prev)) or (peak == 0 and n >= min_terms):
            streak += 1
            if streak >= patience:
                return SeriesValue(total, mag / (1 - q), n + 1)
        else:
            streak = 0
        prev = mag
    raise WindowTooSmall(f"one-sided q-integral not converged after {ctx.max_terms} lattice points")


def hypergeometric_transform_check(a, b, c, z, q, ctx: QContext | None = None, tol=None) -> Report:
    """Residuals of two 2phi1 transformations at one parameter point.

    transform:  2phi1(a,b;c|q;z) = (abz/c;q)_inf/(z;q)_inf 2phi1(c/a,c/b;c|q;abz/c)
    Heine:      2phi1(a,b;c|q;z) = (b,az;q)_inf/(c,z;q)_inf 2phi1(c/b,z;az|q;b)
    """
    ctx = ensure_context(q, ctx)
    rep = Report("hypergeometric-transforms",
                 {"a": a, "b": b, "c": c, "z": z, "q": q},
                 provenance={"precision_digits": ctx.precision_digits})
    tol = tol if tol is not None else 10.0 ** (-(ctx.precision_digits - 10))
    with working(ctx):
        a, b, c, z, qm = (to_mp(v) for v in (a, b, c, z, q))
        lhs = basic_hypergeometric([a, b], [c], qm, z, ctx).value
        w = a * b * z / c
        rhs1 = (qpochhammer_inf(w, qm, ctx).value / qpochhammer_inf(z, qm, ctx).value
                * basic_hypergeometric([c / a, c / b], [c], qm, w, ctx).value)
        rhs2 = (qpochhammer_inf(b, qm, ctx).value * qpochhammer_inf(a * z, qm, ctx).value
                / (qpochhammer_inf(c, qm, ctx).value * qpochhammer_inf(z, qm, ctx).value)
                * basic_hypergeometric([c / b, z], [a * z], qm, b, ctx).value)
        rep.add(Case.make("basictransform", rhs1, lhs, tol))
        rep.add(Case.make("heine", rhs2, lhs, tol))
    return rep
