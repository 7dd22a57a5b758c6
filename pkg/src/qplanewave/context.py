"""Working precision, truncation policy and the value types threaded through every call.

All arithmetic goes through mpmath.  mpmath keeps its precision in a
process-global context, so every evaluation runs under a reentrant lock while
the precision is temporarily raised; concurrent callers are serialised and get
bit-identical results.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Union

import mpmath as mp

from .errors import ParameterError

Number = Union[int, float, str, Fraction, Decimal, "mp.mpf"]

_LOCK = threading.RLock()
_depth = 0


def to_rational(value) -> Fraction:
    """Exact rational from int, Fraction, decimal string, Decimal or float.

    Floats are read through their shortest repr, so ``0.3`` becomes 3/10 and
    not the binary neighbour.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParameterError("boolean is not a numeric parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParameterError(f"non-finite parameter {value!r}")
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot parse {value!r} as a rational") from exc
    if isinstance(value, mp.mpf):
        man, exp = value.man_exp
        return Fraction(int(man)) * Fraction(2) ** int(exp)
    raise ParameterError(f"unsupported parameter type {type(value).__name__}")


def to_mp(value):
    """Convert to an mpmath number at the current working precision."""
    if isinstance(value, (mp.mpf, mp.mpc)):
        return +value
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    if isinstance(value, float):
        return mp.mpf(repr(value))
    if isinstance(value, complex):
        return mp.mpc(mp.mpf(repr(value.real)), mp.mpf(repr(value.imag)))
    if isinstance(value, int):
        return mp.mpf(value)
    if isinstance(value, (str, Decimal)):
        return mp.mpf(str(value))
    if hasattr(value, "value") and hasattr(value, "err_estimate"):
        return +value.value
    return mp.mpmathify(value)


def qpow(q, e):
    """q**e for an exact exponent; integer exponents avoid log/exp."""
    if isinstance(e, Fraction) and e.denominator == 1:
        e = int(e.numerator)
    if isinstance(e, int):
        return q**e
    return mp.power(q, to_mp(e))


@dataclass(frozen=True)
class TruncationPolicy:
    max_terms: int = 10000
    tail_rel_tol: float | None = None
    lattice_window: tuple[int, int] = (-40, 60)

    def __post_init__(self):
        if self.max_terms < 1:
            raise ParameterError("max_terms must be positive")
        if self.tail_rel_tol is not None and not self.tail_rel_tol > 0:
            raise ParameterError("tail_rel_tol must be > 0")
        k_min, k_max = self.lattice_window
        if not k_min < 0 < k_max:
            raise ParameterError(f"lattice_window must satisfy k_min < 0 < k_max, got {self.lattice_window}")


@dataclass(frozen=True)
class QContext:
    """Base q in (0, 1), working precision and truncation policy."""

    q: Fraction
    precision_digits: int = 40
    trunc: TruncationPolicy = field(default_factory=TruncationPolicy)

    def __post_init__(self):
        q = to_rational(self.q)
        if not 0 < q < 1:
            raise ParameterError(f"q must lie strictly in (0, 1), got {q}")
        object.__setattr__(self, "q", q)
        if self.precision_digits < 30:
            raise ParameterError("precision_digits must be >= 30")

    @property
    def tail_rel_tol(self):
        if self.trunc.tail_rel_tol is not None:
            return mp.mpf(self.trunc.tail_rel_tol)
        return mp.mpf(10) ** (-(self.precision_digits - 5))

    @property
    def max_terms(self) -> int:
        return self.trunc.max_terms

    @property
    def window(self) -> tuple[int, int]:
        return self.trunc.lattice_window

    def with_window(self, k_min: int, k_max: int) -> "QContext":
        t = self.trunc
        return QContext(self.q, self.precision_digits,
                        TruncationPolicy(t.max_terms, t.tail_rel_tol, (k_min, k_max)))


def ensure_context(q, ctx: QContext | None) -> QContext:
    if ctx is not None:
        return ctx
    return QContext(to_rational(q))


@contextmanager
def working(ctx: QContext, extra: int = 0, pin: bool = False) -> Iterator[None]:
    """Hold the precision lock with at least ``precision_digits + extra`` digits.

    Nested calls never lower the precision set by an enclosing call, unless
    ``pin`` is set: memoized primitives pin their precision so that a cached
    value does not depend on the caller's working precision.
    """
    global _depth
    with _LOCK:
        prev = mp.mp.dps
        target = ctx.precision_digits + max(0, int(extra))
        if _depth and not pin:
            target = max(target, prev)
        mp.mp.dps = target
        _depth += 1
        try:
            yield
        finally:
            _depth -= 1
            mp.mp.dps = prev


@dataclass(frozen=True)
class SeriesValue:
    """A computed value with an a-posteriori truncation-error estimate."""

    value: object
    err_estimate: object
    terms_used: int

    def __complex__(self):
        return complex(self.value)

    def __float__(self):
        return float(mp.re(self.value))

    @property
    def real(self):
        return mp.re(self.value)

    @property
    def imag(self):
        return mp.im(self.value)
