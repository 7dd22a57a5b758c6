"""Exact lattice points +-q^k and finitely tabulated lattice functions."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import mpmath as mp

from .context import qpow, to_mp
from .errors import LatticeWindowError, ParameterError


@dataclass(frozen=True, order=True)
class LatticePoint:
    """The point sign * q**k; sign == 0 is the distinguished zero point."""

    sign: int
    k: int = 0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ParameterError(f"lattice sign must be -1, 0 or +1, got {self.sign}")
        if self.sign == 0 and self.k != 0:
            raise ParameterError("the zero point carries no exponent")

    @classmethod
    def zero(cls) -> "LatticePoint":
        return cls(0, 0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def value(self, q):
        if self.sign == 0:
            return mp.mpf(0)
        return self.sign * qpow(to_mp(q), self.k)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.sign, self.k)

    def __mul__(self, other: "LatticePoint") -> "LatticePoint":
        if self.sign == 0 or other.sign == 0:
            return LatticePoint.zero()
        return LatticePoint(self.sign * other.sign, self.k + other.k)


def lattice_points(window: tuple[int, int], signed: bool = True) -> Iterator[LatticePoint]:
    k_min, k_max = window
    for k in range(k_min, k_max + 1):
        yield LatticePoint(1, k)
        if signed:
            yield LatticePoint(-1, k)


@dataclass
class LatticeFunction:
    """Complex values on the points +-q^k, k_min <= k <= k_max.

    Points inside the window that are absent from ``values`` are zero
    (finite support); evaluating outside the window raises.
    ``signed=False`` restricts the domain to the positive half lattice.
    ``flagged`` lists points whose value is known to be truncation-limited.
    """

    window: tuple[int, int]
    values: dict = field(default_factory=dict)
    signed: bool = True
    flagged: set = field(default_factory=set)

    def __post_init__(self):
        k_min, k_max = self.window
        if k_min > k_max:
            raise ParameterError(f"empty lattice window {self.window}")
        for p in self.values:
            self._check(p)

    def _check(self, p: LatticePoint):
        if p.is_zero:
            raise LatticeWindowError("lattice functions are not defined at 0")
        if not self.window[0] <= p.k <= self.window[1]:
            raise LatticeWindowError(f"point {p} outside window {self.window}")
        if not self.signed and p.sign < 0:
            raise LatticeWindowError(f"negative point {p} on a half-line function")

    def __call__(self, p: LatticePoint):
        self._check(p)
        return self.values.get(p, mp.mpf(0))

    def __contains__(self, p: LatticePoint) -> bool:
        try:
            self._check(p)
        except LatticeWindowError:
            return False
        return True

    def support(self) -> list[LatticePoint]:
        return sorted(p for p, v in self.values.items() if v != 0)

    def points(self) -> Iterator[LatticePoint]:
        return lattice_points(self.window, self.signed)

    @classmethod
    def from_callable(cls, fn: Callable[[LatticePoint], object], window, signed=True):
        return cls(window, {p: fn(p) for p in lattice_points(window, signed)}, signed)

    def map(self, fn: Callable[[object], object]) -> "LatticeFunction":
        return LatticeFunction(self.window, {p: fn(v) for p, v in self.values.items()},
                               self.signed, set(self.flagged))

    def even_part(self) -> "LatticeFunction":
        return self._parity(1)

    def odd_part(self) -> "LatticeFunction":
        return self._parity(-1)

    def _parity(self, s: int) -> "LatticeFunction":
        if not self.signed:
            raise ParameterError("parity decomposition needs a signed lattice function")
        vals = {}
        for p in self.points():
            v = (self(p) + s * self(-p)) / 2
            if v != 0:
                vals[p] = v
        return LatticeFunction(self.window, vals, True)

    def restrict_positive(self) -> "LatticeFunction":
        vals = {p: v for p, v in self.values.items() if p.sign > 0}
        return LatticeFunction(self.window, vals, False)

    def sup_distance(self, other: "LatticeFunction", points: Iterable[LatticePoint] | None = None):
        pts = list(points) if points is not None else list(self.points())
        return max((abs(self(p) - other(p)) for p in pts), default=mp.mpf(0))

    # CSV with columns sign, k, re, im

    def to_csv(self, digits: int = 25) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["sign", "k", "re", "im"])
        for p in sorted(self.values):
            v = mp.mpc(self.values[p])
            w.writerow([p.sign, p.k, mp.nstr(v.real, digits), mp.nstr(v.imag, digits)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, window=None, signed: bool | None = None) -> "LatticeFunction":
        rows = list(csv.DictReader(io.StringIO(text)))
        missing = {"sign", "k", "re", "im"} - set(rows[0].keys() if rows else {"sign", "k", "re", "im"})
        if missing:
            raise ParameterError(f"lattice CSV missing columns {sorted(missing)}")
        vals = {}
        for r in rows:
            p = LatticePoint(int(r["sign"]), int(r["k"]))
            re_, im_ = mp.mpf(r["re"]), mp.mpf(r["im"])
            vals[p] = re_ if im_ == 0 else mp.mpc(re_, im_)
        if window is None:
            ks = [p.k for p in vals] or [0]
            window = (min(ks), max(ks))
        if signed is None:
            signed = any(p.sign < 0 for p in vals)
        return cls(tuple(window), vals, signed)
