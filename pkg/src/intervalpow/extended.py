"""Power extension with no sign constraint on the base.

Negative bases only produce real values for exponents that are fractions
with odd denominator.  Reflecting those parts of the graph through the
coordinate planes maps them onto the nonnegative-base graph, so every case
reduces to :func:`~intervalpow.nonneg.p0` applied to ``x`` and ``-x``:

================================  ==========================================
exponent                          result
================================  ==========================================
non-singleton interval            ``p0(x,y) | p0(-x,y) | -p0(-x,y)``
even/odd fraction (incl. even n)  ``p0(x,y) | p0(-x,y)``
odd/odd fraction (incl. odd n)    ``p0(x,y) | -p0(-x,y)``
even denominator, irrational      ``p0(x,y)``
================================  ==========================================

For a non-singleton exponent interval both odd-denominator classes are dense
in it, which is why all three pieces are evaluated over the whole interval.
Unions are returned as their hull.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exponent import ExponentKind, Rational, classify_machine, classify_rational, reduce
from .interval import EMPTY, INF, Interval, hull, negate
from .nonneg import DEFAULT_SLACK, enclose_fraction, p0, p0_rational

__all__ = [
    "ExactExponent",
    "pow_float",
    "pow_exact",
    "pow_nonsingleton_exact",
    "combine",
    "enclose_fraction",
]


@dataclass(frozen=True, slots=True)
class ExactExponent:
    """A single exponent known exactly, or asserted irrational by the caller.

    An irrational assertion carries a finite float approximation that is only
    used to place the exponent for evaluation; its value never affects the
    parity class.
    """

    value: Rational | None = None
    approx: float | None = None

    def __post_init__(self):
        if (self.value is None) == (self.approx is None):
            raise ValueError("give exactly one of value (rational) or approx (irrational)")
        if self.value is not None:
            # re-reduce silently in case a caller bypassed reduce()
            object.__setattr__(self, "value", reduce(self.value.num, self.value.den))
        elif not math.isfinite(self.approx):
            raise ValueError(f"irrational approximation must be finite, got {self.approx!r}")

    @classmethod
    def rational(cls, num: int, den: int = 1) -> ExactExponent:
        return cls(value=reduce(num, den))

    @classmethod
    def irrational(cls, approx: float) -> ExactExponent:
        return cls(approx=float(approx))

    @property
    def is_irrational(self) -> bool:
        return self.value is None

    @property
    def kind(self) -> ExponentKind:
        if self.value is None:
            return ExponentKind.IRRATIONAL
        return classify_rational(self.value)

    def enclosure(self) -> Interval:
        if self.value is None:
            a = self.approx
            return Interval(math.nextafter(a, -INF), math.nextafter(a, INF))
        return enclose_fraction(self.value.as_fraction())

    def __str__(self) -> str:
        if self.value is None:
            return f"irrational~{self.approx!r}"
        return str(self.value)


def _pieces(x: Interval, kind: ExponentKind | None, piece) -> Interval:
    direct = piece(x)
    if kind is None:
        reflected = piece(negate(x))
        return hull(direct, reflected, negate(reflected))
    if kind.even_branch:
        return hull(direct, piece(negate(x)))
    if kind.odd_branch:
        return hull(direct, negate(piece(negate(x))))
    return direct


def combine(x: Interval, y: Interval, kind: ExponentKind | None, slack: int = DEFAULT_SLACK) -> Interval:
    """Hull of the pieces selected by ``kind``; ``None`` means a non-singleton exponent."""
    return _pieces(x, kind, lambda b: p0(b, y, slack))


def pow_float(x: Interval, y: Interval, slack: int = DEFAULT_SLACK) -> Interval:
    """Extension of ``x**y`` for intervals with machine bounds."""
    if x.empty or y.empty:
        return EMPTY
    if not y.is_singleton:
        return combine(x, y, None, slack)
    if math.isinf(y.lo):
        return EMPTY
    return combine(x, y, classify_machine(y.lo), slack)


def pow_exact(x: Interval, y: ExactExponent, slack: int = DEFAULT_SLACK) -> Interval:
    """Extension of ``x**y`` for a single exactly-known exponent."""
    if x.empty:
        return EMPTY
    if y.is_irrational:
        return combine(x, y.enclosure(), y.kind, slack)
    q = y.value.as_fraction()
    return _pieces(x, y.kind, lambda b: p0_rational(b, q, slack))


def pow_nonsingleton_exact(x: Interval, y: Interval, slack: int = DEFAULT_SLACK) -> Interval:
    if y.is_singleton:
        raise ValueError("singleton exponent: use pow_exact with an ExactExponent")
    if x.empty or y.empty:
        return EMPTY
    return combine(x, y, None, slack)
