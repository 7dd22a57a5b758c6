"""q-Hankel and q-Dunkl-type transforms on the lattice, and the q-Weber-Schafheitlin
integral (closed branches with their exceptional cases, plus a brute-force oracle).

On the lattice the transforms are plain sums.  With K_a(x) = J_a(x; q^2)/x^a,
mass_j = q^{j(2a+2)} and E_a(iu) = R(u) + i I(u):

  H_a f(q^k)     = sum_j K_a(q^{k+j}) f(q^j) mass_j
  F_a f(s q^k)   = c_a/2 sum_{sig, j} f(sig q^j) [R(q^{k+j}) - i s sig I(q^{k+j})] mass_j
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath as mp

from .context import QContext, SeriesValue, ensure_context, qpow, to_mp, to_rational, working
from .errors import ConvergenceViolation, NoValidBranch, ParameterError
from .lattice import LatticeFunction, LatticePoint
from .measure import MeasureSpec, line_integral, mu_constant
from .neumann import NeumannSystem, neumann_fn
from .qbessel import bessel_kernel_lattice, bessel_lattice, dunkl_kernel_lattice
from .qcore import basic_hypergeometric, lattice_sum, qpochhammer_inf_pow
from .qortho import GramReport

__all__ = [
    "MeasureSpec",
    "WeberParams",
    "hankel_transform",
    "hankel_transform_at",
    "hankel_transform_fn",
    "dunkl_transform",
    "dunkl_transform_at",
    "dunkl_transform_fn",
    "dunkl_decomposed_at",
    "odd_part_constant",
    "weber_branch_validity",
    "weber_schafheitlin_closed",
    "weber_schafheitlin_oracle",
    "bessel_lemma_gram",
    "qbessel_orthogonality_suite",
]


def _alpha(alpha) -> Fraction:
    a = to_rational(alpha)
    if not a > -1:
        raise ParameterError(f"transform parameter must satisfy alpha > -1, got {a}")
    return a


# ---------------------------------------------------------------- transforms


def _table_sum(f: LatticeFunction, k: int, kernel: Callable, ctx: QContext):
    """Finite sum over the nonzero table entries of f for output exponent k.

    ``kernel(p, e)`` returns the weighted kernel for input point p and
    e = k + p.k.  Returns (value, flagged): flagged when a nonzero value at a
    window edge contributes more than the tail tolerance, i.e. data beyond the
    window would have mattered.
    """
    total = mp.mpf(0)
    scale = mp.mpf(0)
    edge = mp.mpf(0)
    k_min, k_max = f.window
    for p, v in f.values.items():
        if v == 0:
            continue
        t = v * kernel(p, k + p.k)
        total += t
        scale += abs(t)
        if p.k in (k_min, k_max):
            edge = max(edge, abs(t))
    flagged = scale != 0 and edge > ctx.tail_rel_tol * scale
    return total, flagged


def hankel_transform_at(f: LatticeFunction, alpha, q, k: int, ctx: QContext | None = None):
    """(H_a f)(q^k) and its truncation flag."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        qm = to_mp(q)
        m = 2 * a + 2

        def kern(p, e):
            if p.sign < 0:
                return mp.mpf(0)
            return bessel_kernel_lattice(a, e, q, ctx) * qpow(qm, m * p.k)

        return _table_sum(f, k, kern, ctx)


def hankel_transform(f: LatticeFunction, alpha, q, ctx: QContext | None = None,
                     window: tuple[int, int] | None = None) -> LatticeFunction:
    """H_{a,q} f on the positive lattice window (default: the input window).

    Negative-lattice entries of f are ignored: the transform lives on (0, inf).
    """
    ctx = ensure_context(q, ctx)
    out_window = window or f.window
    vals, flags = {}, set()
    for k in range(out_window[0], out_window[1] + 1):
        v, fl = hankel_transform_at(f, alpha, q, k, ctx)
        p = LatticePoint(1, k)
        if v != 0:
            vals[p] = v
        if fl:
            flags.add(p)
    return LatticeFunction(tuple(out_window), vals, False, flags)


def _dunkl_kernel_weighted(a, q, s: int, ctx):
    qm = to_mp(q)
    m = 2 * a + 2

    def kern(p: LatticePoint, e: int):
        ev = dunkl_kernel_lattice(a, 1, e, q, ctx).value
        r, i = mp.re(ev), mp.im(ev)
        return mp.mpc(r, -s * p.sign * i) * qpow(qm, m * p.k)

    return kern


def dunkl_transform_at(f: LatticeFunction, alpha, q, y: LatticePoint, inverse: bool = False,
                       ctx: QContext | None = None):
    """(F_a f)(y), or (F_a^{-1} f)(y) = (F_a f)(-y); returns (value, flagged)."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    s = -y.sign if inverse else y.sign
    with working(ctx):
        v, fl = _table_sum(f, y.k, _dunkl_kernel_weighted(a, q, s, ctx), ctx)
        return mu_constant(a, q, ctx) / 2 * v, fl


def dunkl_transform(f: LatticeFunction, alpha, q, inverse: bool = False, ctx: QContext | None = None,
                    window: tuple[int, int] | None = None) -> LatticeFunction:
    """F_{a,q} f (or its inverse) on the signed output window."""
    if not f.signed:
        raise ParameterError("the q-Dunkl transform needs a function on the signed lattice")
    ctx = ensure_context(q, ctx)
    out_window = window or f.window
    vals, flags = {}, set()
    for k in range(out_window[0], out_window[1] + 1):
        for sign in (1, -1):
            p = LatticePoint(sign, k)
            v, fl = dunkl_transform_at(f, alpha, q, p, inverse, ctx)
            if v != 0:
                vals[p] = v
            if fl:
                flags.add(p)
    return LatticeFunction(tuple(out_window), vals, True, flags)


def dunkl_transform_fn(g: Callable[[LatticePoint], object], alpha, q, y: LatticePoint,
                       ctx: QContext | None = None, window: tuple[int, int] | None = None) -> SeriesValue:
    """(F_a g)(y) for g given as a function on the whole lattice (adaptive sum)."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        kern = _dunkl_kernel_weighted(a, q, y.sign, ctx)

        def term(j):
            gp, gm = g(LatticePoint(1, j)), g(LatticePoint(-1, j))
            if gp == 0 and gm == 0:
                return mp.mpf(0), mp.mpf(0)
            tp = gp * kern(LatticePoint(1, j), y.k + j) if gp != 0 else 0
            tm = gm * kern(LatticePoint(-1, j), y.k + j) if gm != 0 else 0
            return tp + tm, abs(tp) + abs(tm)

        sv = lattice_sum(term, q, ctx, window, start=-y.k)
        c = mu_constant(a, q, ctx) / 2
        return SeriesValue(c * sv.value, c * sv.err_estimate, sv.terms_used)


def hankel_transform_fn(g: Callable[[LatticePoint], object], alpha, q, k: int,
                        ctx: QContext | None = None, window: tuple[int, int] | None = None) -> SeriesValue:
    """(H_a g)(q^k) for g given as a function on the positive lattice (adaptive sum)."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        qm = to_mp(q)
        m = 2 * a + 2

        def term(j):
            v = g(LatticePoint(1, j))
            if v == 0:
                return mp.mpf(0), mp.mpf(0)
            t = v * bessel_kernel_lattice(a, k + j, q, ctx) * qpow(qm, m * j)
            return t, abs(t)

        return lattice_sum(term, q, ctx, window, start=-k)


def dunkl_decomposed_at(f: LatticeFunction, alpha, q, y: LatticePoint, ctx: QContext | None = None):
    """Oracle route for (F_a f)(y): H_a on the even part plus the odd part
    through H_{a+1} applied to f_odd(x)/x, scaled by -i y.

    Returns (value, odd_even_parts) where the parts are
    (H_a f_even(|y|), H_{a+1}[f_odd/x](|y|)).
    """
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        qm = to_mp(q)
        even = f.even_part().restrict_positive()
        odd = f.odd_part().restrict_positive()
        odd_over_x = odd.map(lambda v: v)
        odd_over_x = LatticeFunction(odd.window, {p: v / p.value(qm) for p, v in odd.values.items()}, False)
        h_even, _ = hankel_transform_at(even, a, q, y.k, ctx)
        h_odd, _ = hankel_transform_at(odd_over_x, a + 1, q, y.k, ctx)
        yv = y.value(qm)
        return h_even - 1j * yv * h_odd, (h_even, h_odd)


def odd_part_constant(f: LatticeFunction, alpha, q, y: LatticePoint, ctx: QContext | None = None):
    """Empirical factor c(y) with F_a f_odd(y) = c(y) * H_{a+1}[f_odd/x](|y|).

    Derived from the direct sum, not assumed; for the kernel used here it
    comes out as -i y.
    """
    ctx = ensure_context(q, ctx)
    with working(ctx):
        odd = f.odd_part()
        direct, _ = dunkl_transform_at(odd, alpha, q, y, False, ctx)
        _, (_, h_odd) = dunkl_decomposed_at(odd, alpha, q, y, ctx)
        if h_odd == 0:
            raise ParameterError("odd part transform vanishes at this point; constant undefined")
        return direct / h_odd


# ------------------------------------------------------- Weber-Schafheitlin


@dataclass(frozen=True)
class WeberParams:
    lam: Fraction
    mu: Fraction
    nu: Fraction
    m: int
    n: int

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not (self.mu > -1 and self.nu > -1):
            raise ParameterError("Bessel orders mu, nu must exceed -1")
        if int(self.m) != self.m or int(self.n) != self.n:
            raise ParameterError("m and n must be integers")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        if not self.lam < self.mu + self.nu + 1:
            raise ConvergenceViolation(
                f"need lambda < mu + nu + 1, got lambda = {self.lam}, mu + nu + 1 = {self.mu + self.nu + 1}")

    def swapped(self) -> "WeberParams":
        return WeberParams(self.lam, self.nu, self.mu, self.n, self.m)


def _nonpos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def weber_branch_validity(w: WeberParams) -> dict:
    """Exact branch-validity flags for the two closed forms.

    If n-m+(1+lam+mu-nu)/2 and (1-lam+nu-mu)/2 are both non-positive
    integers only the first closed form equals the integral; symmetrically,
    if m-n+(1+lam+nu-mu)/2 and (1-lam+mu-nu)/2 are, only the second does.
    """
    lam, mu, nu, m, n = w.lam, w.mu, w.nu, w.m, w.n
    only_first = _nonpos_int(n - m + (1 + lam + mu - nu) / 2) and _nonpos_int((1 - lam + nu - mu) / 2)
    only_second = _nonpos_int(m - n + (1 + lam + nu - mu) / 2) and _nonpos_int((1 - lam + mu - nu) / 2)
    return {"first": not only_second, "second": not only_first,
            "exceptional": only_first or only_second}


def _branch_exponent(w: WeberParams) -> Fraction:
    """Power of q in the 2phi1 argument of the first branch."""
    return 2 * w.m - 2 * w.n + 1 + w.lam + w.nu - w.mu


def _branch_terminates(w: WeberParams) -> bool:
    # upper parameter q^{1-lam+mu-nu} = (q^2)^{-j}
    e = (1 - w.lam + w.mu - w.nu) / 2
    return _nonpos_int(e)


def _branch_convergent(w: WeberParams) -> bool:
    return _branch_exponent(w) > 0 or _branch_terminates(w)


def _first_branch(w: WeberParams, q, ctx: QContext) -> SeriesValue:
    lam, mu, nu, m, n = w.lam, w.mu, w.nu, w.m, w.n
    qm = to_mp(q)
    qq = qm * qm
    pre = ((1 - qm) * qpow(qm, n * (lam - 1) + (m - n) * mu)
           * qpochhammer_inf_pow(1 + lam + nu - mu, q, ctx) * qpochhammer_inf_pow(2 * mu + 2, q, ctx)
           / (qpochhammer_inf_pow(1 - lam + nu + mu, q, ctx) * qpochhammer_inf_pow(2, q, ctx)))
    if pre == 0:
        return SeriesValue(mp.mpf(0), mp.mpf(0), 0)
    sv = basic_hypergeometric([qpow(qm, 1 - lam + mu + nu), qpow(qm, 1 - lam + mu - nu)],
                              [qpow(qm, 2 * mu + 2)], qq, qpow(qm, _branch_exponent(w)), ctx)
    return SeriesValue(pre * sv.value, abs(pre) * sv.err_estimate, sv.terms_used)


def weber_schafheitlin_closed(w: WeberParams, q, branch: str = "auto", ctx: QContext | None = None) -> SeriesValue:
    """Closed form of int_0^inf x^{-lam} J_mu(q^m x; q^2) J_nu(q^n x; q^2) d_q x.

    ``branch`` "first" or "second" evaluates that expression as is (even if
    the exceptional-case rule excludes it); "auto" picks a valid branch whose
    series converges and raises NoValidBranch if there is none.
    """
    ctx = ensure_context(q, ctx)
    if branch not in ("first", "second", "auto"):
        raise ParameterError(f"branch must be first, second or auto, got {branch!r}")
    with working(ctx, 5):
        if branch == "first":
            return _first_branch(w, q, ctx)
        if branch == "second":
            return _first_branch(w.swapped(), q, ctx)
        valid = weber_branch_validity(w)
        if valid["first"] and _branch_convergent(w):
            return _first_branch(w, q, ctx)
        if valid["second"] and _branch_convergent(w.swapped()):
            return _first_branch(w.swapped(), q, ctx)
        raise NoValidBranch(f"no valid convergent closed form for {w}: validity {valid}")


def weber_auto_window(w: WeberParams, q, ctx: QContext) -> tuple[int, int]:
    """Window whose small-x end makes the q^{k(1-lam+mu+nu)} tail negligible."""
    p = float(1 - w.lam + w.mu + w.nu)
    need = math.ceil((ctx.precision_digits + 5) / (p * math.log10(1 / float(to_rational(q))))) + 10
    need += max(0, -min(w.m, w.n))
    k_min, k_max = ctx.window
    return (k_min, max(k_max, need))


def weber_schafheitlin_oracle(w: WeberParams, q, ctx: QContext | None = None,
                              window: tuple[int, int] | None = None) -> SeriesValue:
    """Direct lattice sum (1-q) sum_k q^{k(1-lam)} J_mu(q^{k+m}) J_nu(q^{k+n})."""
    ctx = ensure_context(q, ctx)
    win = window or weber_auto_window(w, q, ctx)
    with working(ctx, 5):
        qm = to_mp(q)

        def term(k):
            t = (qpow(qm, k * (1 - w.lam)) * bessel_lattice(w.mu, k + w.m, q, ctx)
                 * bessel_lattice(w.nu, k + w.n, q, ctx))
            return t, abs(t)

        sv = lattice_sum(term, q, ctx, win, start=-min(w.m, w.n))
        return SeriesValue((1 - qm) * sv.value, (1 - qm) * sv.err_estimate, sv.terms_used)


# ------------------------------------------------------------ Gram suites


def _gram_summary(G, ref) -> GramReport:
    size = len(G)
    resid = [[mp.mpf(0)] * size for _ in range(size)]
    off, diag = mp.mpf(0), mp.mpf(0)
    for i in range(size):
        for j in range(size):
            if i == j:
                r = abs(G[i][i] - ref[i]) / abs(ref[i])
                diag = max(diag, r)
            else:
                r = abs(G[i][j]) / mp.sqrt(abs(G[i][i] * G[j][j]))
                off = max(off, r)
            resid[i][j] = r
    return GramReport(size, off, diag, resid, G, ref)


def bessel_lemma_gram(alpha, q, N: int, ctx: QContext | None = None) -> GramReport:
    """Gram of J_{a+2n+1}(q^n x; q^2), n <= N, under d_q x / x, against
    (1-q)/(1-q^{2a+4n+2}) on the diagonal."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    G = [[mp.mpf(0)] * (N + 1) for _ in range(N + 1)]
    with working(ctx):
        qm = to_mp(q)
        for i in range(N + 1):
            for j in range(i, N + 1):
                w = WeberParams(1, a + 2 * i + 1, a + 2 * j + 1, i, j)
                G[i][j] = G[j][i] = weber_schafheitlin_oracle(w, q, ctx).value
        ref = [(1 - qm) / (1 - qpow(qm, 2 * a + 4 * i + 2)) for i in range(N + 1)]
        return _gram_summary(G, ref)


def qbessel_orthogonality_suite(alpha, q, N: int, ctx: QContext | None = None,
                                printed_shift: bool = False) -> GramReport:
    """Gram of the Neumann functions J_{a,n}, n <= N, under d mu_{q,a} on the
    real line; diagonal reference c_a / (1 - q^{2a+2n+2})."""
    a = _alpha(alpha)
    ctx = ensure_context(q, ctx)
    sys = NeumannSystem(a, q, max(N, 0), printed_shift)
    G = [[mp.mpf(0)] * (N + 1) for _ in range(N + 1)]
    with working(ctx):
        qm = to_mp(q)
        c = mu_constant(a, q, ctx)
        win = (ctx.window[0], max(ctx.window[1],
                                  math.ceil((ctx.precision_digits + 5) / ((2 * float(a) + 2) * math.log10(1 / float(qm)))) + 10))
        for i in range(N + 1):
            for j in range(i, N + 1):
                def g(p, i=i, j=j):
                    return neumann_fn(sys, i, p, ctx) * neumann_fn(sys, j, p, ctx)
                G[i][j] = G[j][i] = line_integral(g, a, q, ctx, win).value
        ref = [c / (1 - qpow(qm, 2 * a + 2 * i + 2)) for i in range(N + 1)]
        return _gram_summary(G, ref)
