"""q-Neumann functions  J_{a,n}(x; q^2) = J_{a+n+1}(x q^{s(n)}; q^2) / x^{a+1}.

The argument shift s(n) is floor(n/2).  The alternative floor((n+1)/2)
differs only for odd n; with it the odd-index transform identities and the
kernel expansion fail numerically, so it is kept only as an opt-in
(``printed_shift=True``) for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .context import QContext, ensure_context, qpow, to_mp, to_rational, working
from .errors import ParameterError, ZeroArgument
from .lattice import LatticePoint
from .qbessel import bessel_kernel_lattice, jackson3_bessel


@dataclass(frozen=True)
class NeumannSystem:
    base_order: Fraction
    q: Fraction
    max_index: int = 64
    printed_shift: bool = False

    def __post_init__(self):
        a = to_rational(self.base_order)
        if not a > -1:
            raise ParameterError(f"Neumann base order must exceed -1, got {a}")
        object.__setattr__(self, "base_order", a)
        qr = to_rational(self.q)
        if not 0 < qr < 1:
            raise ParameterError("q must lie in (0, 1)")
        object.__setattr__(self, "q", qr)
        if self.max_index < 0:
            raise ParameterError("max_index must be >= 0")

    def shift(self, n: int) -> int:
        if n < 0:
            raise ParameterError("Neumann index must be >= 0")
        return (n + 1) // 2 if self.printed_shift else n // 2


def neumann_fn(sys: NeumannSystem, n: int, x, ctx: QContext | None = None):
    """J_{a,n}(x; q^2) at a lattice point (or a real x != 0).

    Even n gives an even function, odd n an odd one; negative x is reduced
    to |x| by that parity, never through complex powers.
    """
    if not 0 <= n <= sys.max_index:
        raise ParameterError(f"Neumann index {n} outside 0..{sys.max_index}")
    ctx = ensure_context(sys.q, ctx)
    a, s = sys.base_order, sys.shift(n)
    with working(ctx):
        if isinstance(x, LatticePoint):
            if x.is_zero:
                raise ZeroArgument("Neumann functions are evaluated at x != 0")
            # J_{a+n+1}(q^{k+s}) / q^{k(a+1)} = K(q^{k+s}) q^{kn + s(a+n+1)}
            val = bessel_kernel_lattice(a + n + 1, x.k + s, sys.q, ctx) * qpow(
                to_mp(sys.q), x.k * n + s * (a + n + 1))
            sign = x.sign
        else:
            xm = to_mp(x)
            if xm == 0:
                raise ZeroArgument("Neumann functions are evaluated at x != 0")
            sign = 1 if xm > 0 else -1
            ax = abs(xm)
            qm = to_mp(sys.q)
            val = (jackson3_bessel(a + n + 1, ax * qm**s, qm * qm, ctx).value
                   / mp.power(ax, to_mp(a + 1)))
        if sign < 0 and n % 2:
            val = -val
        return val
