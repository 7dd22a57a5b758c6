"""Third Jackson (Hahn-Exton) q-Bessel function, q-trigonometric functions,
Rubin's q-exponential and the Dunkl-type kernel E_alpha(ix; q^2).

Everything reduces to the entire series 1phi1(0; b | Q; z).  For large
arguments its terms first grow to about 10^P before the Gaussian factor wins
and the sum itself can be as small as 10^-P, so roughly 2P guard digits are
needed.  P is estimated up front; the achieved cancellation is measured after
summing and the sum is redone with more digits if the guard was too thin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .context import QContext, SeriesValue, ensure_context, qpow, to_mp, to_rational, working
from .errors import BranchCut, NonConvergent, ParameterError, ZeroArgument
from .lattice import LatticePoint
from .qcore import _hyper_sum, qpochhammer, qpochhammer_inf, qpochhammer_inf_pow

__all__ = [
    "BesselOrder",
    "KernelParams",
    "jackson3_bessel",
    "jackson3_bessel_explicit",
    "bessel_lattice",
    "bessel_kernel_lattice",
    "q_trig",
    "rubin_exp",
    "dunkl_kernel",
    "dunkl_kernel_bessel",
    "dunkl_kernel_lattice",
]


@dataclass(frozen=True)
class BesselOrder:
    nu: Fraction

    def __post_init__(self):
        nu = to_rational(self.nu)
        if not nu > -1:
            raise ParameterError(f"Bessel order must satisfy nu > -1, got {nu}")
        object.__setattr__(self, "nu", nu)


@dataclass(frozen=True)
class KernelParams:
    alpha: Fraction

    def __post_init__(self):
        a = to_rational(self.alpha)
        if not a > -1:
            raise ParameterError(f"kernel parameter must satisfy alpha > -1, got {a}")
        object.__setattr__(self, "alpha", a)


def _as_order(nu) -> Fraction:
    return nu.nu if isinstance(nu, BesselOrder) else BesselOrder(nu).nu


def _as_alpha(alpha) -> Fraction:
    return alpha.alpha if isinstance(alpha, KernelParams) else KernelParams(alpha).alpha


def _peak_digits(base, absz) -> float:
    """log10 of the largest term of 1phi1(0; b | base; z), ignoring Pochhammers."""
    lq = float(mp.log10(base))
    lz = float(mp.log10(absz)) if absz != 0 else -math.inf
    if lz == -math.inf:
        return 0.0
    # n(n-1)/2 lq + n lz is maximal near n = 1/2 - lz/lq
    n = max(0, round(0.5 - lz / lq))
    best = 0.0
    for m in (n - 1, n, n + 1):
        if m >= 0:
            best = max(best, m * (m - 1) / 2 * lq + m * lz)
    return best


def _phi11(make, ctx: QContext) -> SeriesValue:
    """1phi1(0; b | base; z) to ctx precision relative to the result.

    ``make()`` returns (b, base, z) and is re-run at every trial precision:
    near the zeros the sum is so ill-conditioned that the arguments
    themselves must be formed from exact inputs at the raised precision.
    """
    with working(ctx):
        b0, base0, z0 = make()
        peak = _peak_digits(base0, abs(z0))
    extra = int(2 * peak) + 10
    for _ in range(5):
        with working(ctx, extra):
            bb, qb, zz = make()
            sv, max_term = _hyper_sum([mp.mpf(0)], [bb], qb, zz, ctx)
            if sv.value == 0:
                lost = float(mp.log10(max_term)) + extra
            else:
                lost = float(mp.log10(max_term / abs(sv.value)))
            if lost + 8 <= extra:
                err = sv.err_estimate + abs(sv.value) * mp.mpf(10) ** (-(ctx.precision_digits + extra - lost))
                return SeriesValue(sv.value, err, sv.terms_used)
        extra = int(lost) + 15
    raise NonConvergent("1phi1 cancellation could not be resolved by raising precision")


@lru_cache(maxsize=65536)
def _phi11_lattice(c: Fraction, e: int, q: Fraction, ctx: QContext) -> SeriesValue:
    """1phi1(0; q^c | q^2; q^{2+2e}), memoized with pinned precision."""

    def make():
        qm = to_mp(q)
        return qpow(qm, c), qm * qm, qm ** (2 + 2 * e)

    with working(ctx, 0, pin=True):
        return _phi11(make, ctx)


def jackson3_bessel(nu, x, q, ctx: QContext | None = None) -> SeriesValue:
    """J_nu^{(3)}(x; q) through its 1phi1 representation.

    ``q`` is the base of the function; J(x; q^2) is jackson3_bessel(nu, x, q**2).
    A LatticePoint x is read as sign * q^k in that same base.
    """
    nu = _as_order(nu)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        qm, xm = to_mp(q), _x_value(x, q)
        if not 0 < qm < 1:
            raise ParameterError("the base of J must lie in (0, 1)")
        integer_order = nu.denominator == 1
        if xm == 0:
            if nu > 0:
                return SeriesValue(mp.mpf(0), mp.mpf(0), 0)
            if nu == 0:
                pre = qpochhammer_inf(qm, qm, ctx).value
                return SeriesValue(pre / qpochhammer_inf(qm, qm, ctx).value, mp.mpf(0), 0)
            raise ZeroArgument(f"J_nu(0) is singular for nu = {nu} < 0")
        if not integer_order and mp.im(xm) == 0 and mp.re(xm) < 0:
            raise BranchCut(f"x^nu undefined on the negative axis for non-integer nu = {nu}")
        b = qpow(qm, nu + 1)
        pre = qpochhammer_inf(b, qm, ctx).value / qpochhammer_inf(qm, qm, ctx).value
        xnu = xm ** int(nu) if integer_order else mp.power(xm, to_mp(nu))
        sv = _phi11(lambda: (qpow(to_mp(q), nu + 1), to_mp(q), to_mp(q) * _x_value(x, q) ** 2), ctx)
        scale = abs(pre * xnu)
        return SeriesValue(pre * xnu * sv.value, scale * sv.err_estimate, sv.terms_used)


def jackson3_bessel_explicit(nu, x, q, ctx: QContext | None = None, extra_digits: int | None = None):
    """J_nu^{(3)}(x; q) from the explicit power series with directly built terms.

    Test oracle only: every term is formed from its own Pochhammer products
    rather than a running ratio.
    """
    nu = _as_order(nu)
    ctx = ensure_context(q, ctx)
    xm = _x_value(x, q)
    if extra_digits is None:
        extra_digits = int(2 * _peak_digits(to_mp(q), abs(to_mp(q) * xm * xm))) + 20
    with working(ctx, extra_digits):
        qm, xm = to_mp(q), _x_value(x, q)
        b = qpow(qm, nu + 1)
        tol = mp.mpf(10) ** (-(ctx.precision_digits + 5))
        total, n, peak = mp.mpf(0), 0, mp.mpf(0)
        while n < ctx.max_terms:
            t = (-1) ** n * qm ** (n * (n + 1) // 2) * xm ** (2 * n) / (
                qpochhammer(b, qm, n) * qpochhammer(qm, qm, n))
            total += t
            peak = max(peak, abs(t))
            if n > 2 and abs(t) < tol * abs(total) and abs(t) < peak:
                break
            n += 1
        pre = qpochhammer_inf(b, qm, ctx).value / qpochhammer_inf(qm, qm, ctx).value
        xnu = xm ** int(nu) if nu.denominator == 1 else mp.power(xm, to_mp(nu))
        return +(pre * xnu * total)


def bessel_kernel_lattice(nu, e: int, q, ctx: QContext | None = None):
    """J_nu(x; q^2) / x^nu at x = q^e, without forming x^nu separately."""
    nu = to_rational(nu)
    ctx = ensure_context(q, ctx)
    qr = to_rational(q)
    with working(ctx):
        pre = qpochhammer_inf_pow(2 * nu + 2, qr, ctx) / qpochhammer_inf_pow(2, qr, ctx)
        return pre * _phi11_lattice(2 * nu + 2, int(e), qr, ctx).value


def bessel_lattice(nu, e: int, q, ctx: QContext | None = None):
    """J_nu(q^e; q^2) for exact rational nu and integer e."""
    nu = to_rational(nu)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        return bessel_kernel_lattice(nu, e, q, ctx) * qpow(to_mp(q), nu * e)


def q_trig(z, q, ctx: QContext | None = None) -> tuple[SeriesValue, SeriesValue]:
    """(cos(z; q^2), sin(z; q^2)) with ``q`` the square root of the base.

    The Bessel prefactors cancel the half-integer powers of z exactly, leaving
    entire series:
        cos(z; q^2) = 1phi1(0; q | q^2; q^2 z^2)
        sin(z; q^2) = z/(1-q) * 1phi1(0; q^3 | q^2; q^2 z^2)
    """
    ctx = ensure_context(q, ctx)
    return _q_trig(lambda: to_mp(z), q, ctx)


def _q_trig(zfn, q, ctx: QContext):
    with working(ctx):
        def make(power):
            qm = to_mp(q)
            return qm**power, qm * qm, (qm * zfn()) ** 2

        c = _phi11(lambda: make(1), ctx)
        s = _phi11(lambda: make(3), ctx)
        f = zfn() / (1 - to_mp(q))
        return c, SeriesValue(f * s.value, abs(f) * s.err_estimate, s.terms_used)


def rubin_exp(z, q, ctx: QContext | None = None) -> SeriesValue:
    """e(z; q^2) = cos(-iz; q^2) + i sin(-iz; q^2)."""
    ctx = ensure_context(q, ctx)
    with working(ctx):
        c, s = _q_trig(lambda: -1j * to_mp(z), q, ctx)
        return SeriesValue(c.value + 1j * s.value, c.err_estimate + s.err_estimate,
                           max(c.terms_used, s.terms_used))


def _x_value(x, q):
    if isinstance(x, LatticePoint):
        return x.value(to_mp(q))
    return to_mp(x)


def dunkl_kernel(alpha, x, q, ctx: QContext | None = None) -> SeriesValue:
    """E_alpha(ix; q^2) for real x (or a LatticePoint), via the 1phi1 pair."""
    a = _as_alpha(alpha)
    ctx = ensure_context(q, ctx)
    if isinstance(x, LatticePoint) and not x.is_zero:
        return dunkl_kernel_lattice(a, x.sign, x.k, q, ctx)
    with working(ctx):
        def make(c):
            qm = to_mp(q)
            return qpow(qm, c), qm * qm, (qm * _x_value(x, q)) ** 2

        re_ = _phi11(lambda: make(2 * a + 2), ctx)
        im_ = _phi11(lambda: make(2 * a + 4), ctx)
        f = _x_value(x, q) / (1 - qpow(to_mp(q), 2 * a + 2))
        return SeriesValue(mp.mpc(re_.value, f * im_.value), re_.err_estimate + abs(f) * im_.err_estimate,
                           max(re_.terms_used, im_.terms_used))


def dunkl_kernel_lattice(alpha, sign: int, k: int, q, ctx: QContext | None = None) -> SeriesValue:
    """E_alpha(i sign q^k; q^2) from the memoized lattice series."""
    a = to_rational(alpha)
    ctx = ensure_context(q, ctx)
    qr = to_rational(q)
    with working(ctx):
        qm = to_mp(q)
        re_ = _phi11_lattice(2 * a + 2, k, qr, ctx)
        im_ = _phi11_lattice(2 * a + 4, k, qr, ctx)
        f = sign * qm**k / (1 - qpow(qm, 2 * a + 2))
        return SeriesValue(mp.mpc(re_.value, f * im_.value), re_.err_estimate + abs(f) * im_.err_estimate,
                           max(re_.terms_used, im_.terms_used))


def dunkl_kernel_bessel(alpha, x, q, ctx: QContext | None = None):
    """E_alpha(ix; q^2) from the Bessel-quotient form (used as an oracle).

    Negative x is handled through |x|: J_a(x)/x^a is even and the second
    quotient is multiplied by x itself.
    """
    a = _as_alpha(alpha)
    ctx = ensure_context(q, ctx)
    with working(ctx):
        qm, xm = to_mp(q), _x_value(x, q)
        qq = qm * qm
        pre = qpochhammer_inf(qq, qq, ctx).value / qpochhammer_inf(qpow(qm, 2 * a + 2), qq, ctx).value
        if xm == 0:
            return mp.mpc(1, 0)
        ax = abs(xm)
        j0 = jackson3_bessel(a, ax, qq, ctx).value / mp.power(ax, to_mp(a))
        j1 = jackson3_bessel(a + 1, ax, qq, ctx).value / mp.power(ax, to_mp(a + 1))
        return pre * mp.mpc(j0, j1 * xm)
