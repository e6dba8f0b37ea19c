"""Closed extended-real intervals with binary64 bounds.

Only the operations the power extension needs are provided: hull, negation,
intersection with the nonnegative half-line and outward widening by whole
ulps.  General interval arithmetic is deliberately absent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Interval",
    "EMPTY",
    "make",
    "hull",
    "negate",
    "intersect",
    "clamp_nonneg",
    "is_singleton",
    "widen_outward",
    "step_down",
    "step_up",
    "format_bound",
    "format_interval",
    "parse_interval",
]

INF = math.inf


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` over the extended reals, or the empty set.

    Direct construction is strict (``lo > hi`` raises); use :func:`make` when
    inverted bounds should yield the empty interval.  The empty interval is
    stored canonically as ``lo=+inf, hi=-inf, empty=True`` so that equality is
    plain field equality.
    """

    lo: float
    hi: float
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            object.__setattr__(self, "lo", INF)
            object.__setattr__(self, "hi", -INF)
            return
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError(f"NaN interval bound: [{self.lo}, {self.hi}]")
        if lo > hi:
            raise ValueError(f"inverted interval bounds: [{lo}, {hi}]")
        # adding +0.0 turns -0.0 into +0.0 and leaves everything else alone
        object.__setattr__(self, "lo", lo + 0.0)
        object.__setattr__(self, "hi", hi + 0.0)

    @property
    def is_singleton(self) -> bool:
        return not self.empty and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return not self.empty and math.isfinite(self.lo) and math.isfinite(self.hi)

    def contains(self, value: float) -> bool:
        return not self.empty and self.lo <= value <= self.hi

    def subset(self, other: Interval) -> bool:
        if self.empty:
            return True
        return not other.empty and other.lo <= self.lo and self.hi <= other.hi

    def __contains__(self, value: float) -> bool:
        return self.contains(value)

    def __neg__(self) -> Interval:
        return negate(self)

    def __or__(self, other: Interval) -> Interval:
        return hull(self, other)

    def __and__(self, other: Interval) -> Interval:
        return intersect(self, other)

    def __str__(self) -> str:
        return format_interval(self)

    def __repr__(self) -> str:
        return f"Interval({format_interval(self)})"


EMPTY = Interval(INF, -INF, empty=True)


def make(lo: float, hi: float) -> Interval:
    """Build ``[lo, hi]``; inverted bounds give :data:`EMPTY`, NaN raises."""
    lo, hi = float(lo), float(hi)
    if math.isnan(lo) or math.isnan(hi):
        raise ValueError(f"NaN interval bound: [{lo}, {hi}]")
    if lo > hi:
        return EMPTY
    return Interval(lo, hi)


def hull(*intervals: Interval) -> Interval:
    """Smallest interval containing every argument; empty arguments are ignored."""
    live = [iv for iv in intervals if not iv.empty]
    if not live:
        return EMPTY
    return Interval(min(iv.lo for iv in live), max(iv.hi for iv in live))


def negate(a: Interval) -> Interval:
    if a.empty:
        return EMPTY
    return Interval(-a.hi, -a.lo)


def intersect(a: Interval, b: Interval) -> Interval:
    if a.empty or b.empty:
        return EMPTY
    return make(max(a.lo, b.lo), min(a.hi, b.hi))


def clamp_nonneg(a: Interval) -> Interval:
    """``a`` intersected with ``[0, +inf]``."""
    if a.empty or a.hi < 0.0:
        return EMPTY
    return Interval(max(a.lo, 0.0), a.hi)


def is_singleton(a: Interval) -> bool:
    return a.is_singleton


def step_down(x: float, ulps: int = 1) -> float:
    for _ in range(ulps):
        x = math.nextafter(x, -INF)
    return x


def step_up(x: float, ulps: int = 1) -> float:
    for _ in range(ulps):
        x = math.nextafter(x, INF)
    return x


def widen_outward(a: Interval, ulps: int) -> Interval:
    """Move each finite bound ``ulps`` representable steps outward."""
    if a.empty:
        raise ValueError("cannot widen the empty interval")
    if ulps < 0:
        raise ValueError("ulps must be nonnegative")
    lo = a.lo if math.isinf(a.lo) else step_down(a.lo, ulps)
    hi = a.hi if math.isinf(a.hi) else step_up(a.hi, ulps)
    return Interval(lo, hi)


def format_bound(x: float) -> str:
    """Shortest round-trip decimal; integral values drop the trailing ``.0``."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = repr(x + 0.0)
    if text.endswith(".0"):
        text = text[:-2]
    return text


def format_interval(a: Interval) -> str:
    if a.empty:
        return "empty"
    return f"[{format_bound(a.lo)},{format_bound(a.hi)}]"


def parse_interval(text: str, *, strict: bool = True) -> Interval:
    """Parse ``[lo,hi]`` or ``empty``.

    With ``strict`` (the default) inverted bounds are an error rather than a
    spelling of the empty interval.
    """
    s = text.strip()
    if s.lower() == "empty":
        return EMPTY
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"malformed interval {text!r}: expected [lo,hi] or empty")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed interval {text!r}: expected two bounds")
    try:
        lo, hi = (float(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"malformed interval {text!r}: bad number") from None
    if math.isnan(lo) or math.isnan(hi):
        raise ValueError(f"malformed interval {text!r}: NaN bound")
    if lo > hi:
        if strict:
            raise ValueError(f"malformed interval {text!r}: inverted bounds")
        return EMPTY
    return Interval(lo, hi)
