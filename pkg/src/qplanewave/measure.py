"""The lattice measures d mu_{q,alpha} (two-sided) and d omega_{q,alpha} (half line).

  d mu_{q,a}(x)    = c_a / (2(1-q)) |x|^{2a+1} d_q x,   c_a = (q^{2a+2}; q^2)_inf / (q^2; q^2)_inf
  d omega_{q,a}(y) = y^{2a+1} / (1-q) d_q y

so that at the lattice point +-q^k the Jackson sum puts the masses
c_a/2 * q^{k(2a+2)} and q^{k(2a+2)} respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath as mp

from .context import QContext, SeriesValue, ensure_context, qpow, to_mp, to_rational, working
from .errors import ParameterError, WindowTooSmall
from .lattice import LatticePoint
from .qcore import lattice_sum, qpochhammer_inf_pow

KINDS = ("dunkl_mu", "hankel_omega")


def mu_constant(alpha, q, ctx: QContext | None = None):
    """(q^{2a+2}; q^2)_inf / (q^2; q^2)_inf."""
    ctx = ensure_context(q, ctx)
    a = to_rational(alpha)
    with working(ctx):
        return qpochhammer_inf_pow(2 * a + 2, q, ctx) / qpochhammer_inf_pow(2, q, ctx)


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    alpha: Fraction
    q: Fraction

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"measure kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "alpha", to_rational(self.alpha))
        object.__setattr__(self, "q", to_rational(self.q))
        if not self.alpha > -1:
            raise ParameterError("measure parameter alpha must exceed -1")

    def density(self, x, ctx: QContext | None = None):
        """Density with respect to d_q x at a real point x != 0."""
        ctx = ensure_context(self.q, ctx)
        with working(ctx):
            xm = x.value(to_mp(self.q)) if isinstance(x, LatticePoint) else to_mp(x)
            if xm == 0:
                raise ParameterError("the measure density is not evaluated at 0")
            if self.kind == "hankel_omega" and xm < 0:
                raise ParameterError("d omega lives on the positive half line")
            p = mp.power(abs(xm), to_mp(2 * self.alpha + 1))
            qm = to_mp(self.q)
            if self.kind == "dunkl_mu":
                return mu_constant(self.alpha, self.q, ctx) / (2 * (1 - qm)) * p
            return p / (1 - qm)

    def mass(self, k: int, ctx: QContext | None = None):
        """Jackson-sum mass at the lattice point +-q^k (one sign)."""
        ctx = ensure_context(self.q, ctx)
        with working(ctx):
            m = qpow(to_mp(self.q), (2 * self.alpha + 2) * k)
            if self.kind == "dunkl_mu":
                return mu_constant(self.alpha, self.q, ctx) / 2 * m
            return m


def interval_integral(g: Callable[[LatticePoint], object], alpha, q, ctx: QContext | None = None,
                      j_max: int | None = None, patience: int = 3) -> SeriesValue:
    """Integral of g over [-1, 1] against d mu_{q,alpha}; g takes a LatticePoint.

    Sums j = 0, 1, ... until ``patience`` consecutive negligible lattice terms;
    ``j_max`` caps the walk (default: the lattice window's k_max) and reaching
    it with a non-negligible term raises WindowTooSmall.
    """
    ctx = ensure_context(q, ctx)
    a = to_rational(alpha)
    cap = ctx.window[1] if j_max is None else j_max
    with working(ctx):
        qm = to_mp(q)
        step = qpow(qm, 2 * a + 2)
        w = mp.mpf(1)
        tol = ctx.tail_rel_tol
        total, peak, streak, last = mp.mpf(0), mp.mpf(0), 0, mp.mpf(0)
        used = 0
        for j in range(cap + 1):
            gp, gm = g(LatticePoint(1, j)), g(LatticePoint(-1, j))
            total += (gp + gm) * w
            mag = (abs(gp) + abs(gm)) * w
            peak = max(peak, mag)
            last = mag
            used += 1
            if mag <= tol * peak or peak == 0 and j >= 8:
                streak += 1
                if streak >= patience:
                    break
            else:
                streak = 0
            w *= step
        else:
            if last > tol * peak:
                raise WindowTooSmall(f"[-1,1] integral still has terms of size {mp.nstr(last, 5)} at j = {cap}")
        c = mu_constant(a, q, ctx) / 2
        return SeriesValue(c * total, c * last / (1 - step), used)


def line_integral(g: Callable[[LatticePoint], object], alpha, q, ctx: QContext | None = None,
                  window: tuple[int, int] | None = None) -> SeriesValue:
    """Integral of g over the real line against d mu_{q,alpha}."""
    ctx = ensure_context(q, ctx)
    a = to_rational(alpha)
    with working(ctx):
        qm = to_mp(q)
        expo = 2 * a + 2

        def term(k):
            w = qpow(qm, expo * k)
            gp, gm = g(LatticePoint(1, k)), g(LatticePoint(-1, k))
            return (gp + gm) * w, (abs(gp) + abs(gm)) * w

        sv = lattice_sum(term, q, ctx, window)
        c = mu_constant(a, q, ctx) / 2
        return SeriesValue(c * sv.value, c * sv.err_estimate, sv.terms_used)


def half_line_integral(g: Callable[[LatticePoint], object], alpha, q, ctx: QContext | None = None,
                       window: tuple[int, int] | None = None) -> SeriesValue:
    """Integral of g over (0, inf) against d omega_{q,alpha}."""
    ctx = ensure_context(q, ctx)
    a = to_rational(alpha)
    with working(ctx):
        qm = to_mp(q)
        expo = 2 * a + 2

        def term(k):
            w = qpow(qm, expo * k)
            v = g(LatticePoint(1, k))
            return v * w, abs(v) * w

        return lattice_sum(term, q, ctx, window)
