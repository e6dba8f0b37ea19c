"""Interval extension of ``a**b`` restricted to nonnegative bases.

For ``a >= 0`` the power is monotone in ``a`` for each fixed ``b`` and
monotone in ``b`` for each fixed ``a``, so the extrema over a box sit at its
four corners.  Corners on the boundary of the domain are taken as limits:
``a -> 0+`` with ``b < 0`` contributes a supremum of ``+inf``, infinite
bounds contribute ``0``, ``1`` or ``+inf``.

Point values come from :func:`pow_point_bounds`, which brackets the true
power between two floats.  Small integer exponents are evaluated exactly in
rational arithmetic and rounded in each direction, so squares and cubes of
representable bases stay tight; everything else goes through libm ``pow``
and is widened by ``slack`` ulps on each side.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from typing import NamedTuple

from .interval import EMPTY, INF, Interval, clamp_nonneg, step_down, step_up

__all__ = [
    "DEFAULT_SLACK",
    "EXACT_INT_LIMIT",
    "EXACT_ROOT_LIMIT",
    "PointPowerBounds",
    "pow_point_bounds",
    "rational_point_bounds",
    "p0",
    "p0_rational",
]

DEFAULT_SLACK = 2
EXACT_INT_LIMIT = 64
# numerator and denominator bound for certifying a**(n/d) through L**d vs a**n
EXACT_ROOT_LIMIT = 128
_MAX_CERT_STEPS = 8
DBL_MAX = sys.float_info.max


class PointPowerBounds(NamedTuple):
    down: float
    up: float


_ONE = PointPowerBounds(1.0, 1.0)
_ZERO = PointPowerBounds(0.0, 0.0)
_POS_INF = PointPowerBounds(INF, INF)


def _round_both(value: Fraction) -> PointPowerBounds:
    # float(Fraction) is correctly rounded (exact big-int true division)
    try:
        near = float(value)
    except OverflowError:
        return PointPowerBounds(DBL_MAX, INF)
    exact = Fraction(near)
    if exact == value:
        return PointPowerBounds(near, near)
    if exact < value:
        return PointPowerBounds(near, math.nextafter(near, INF))
    return PointPowerBounds(math.nextafter(near, -INF), near)


def _limit_bounds(a: float, b: float) -> PointPowerBounds:
    if math.isinf(a):
        if b > 0:
            return _POS_INF
        return _ONE if b == 0 else _ZERO
    # b is infinite, a is finite and positive
    if a == 1.0:
        return _ONE
    if (a > 1.0) == (b > 0):
        return _POS_INF
    return _ZERO


def pow_point_bounds(a: float, b: float, slack: int = DEFAULT_SLACK) -> PointPowerBounds:
    """Floats ``down <= a**b <= up`` for ``a >= 0``.

    Infinite arguments are read as limits.  ``0**b`` with ``b < 0`` is outside
    the domain and raises.
    """
    a, b = float(a), float(b)
    if math.isnan(a) or math.isnan(b):
        raise ValueError("NaN argument")
    if a < 0:
        raise ValueError(f"negative base {a!r}")
    if a == 0.0:
        if b < 0:
            raise ValueError(f"0**{b!r} is undefined")
        return _ONE if b == 0 else _ZERO
    if math.isinf(a) or math.isinf(b):
        return _limit_bounds(a, b)
    if b == 0.0 or a == 1.0:
        return _ONE
    if b.is_integer() and abs(b) <= EXACT_INT_LIMIT:
        return _round_both(Fraction(a) ** int(b))
    try:
        r = math.pow(a, b)
    except OverflowError:
        return PointPowerBounds(step_down(DBL_MAX, slack), INF)
    down = max(step_down(r, slack), 0.0)
    up = step_up(r, slack)
    # a**b lies between the exact powers at the neighbouring integers; clamping
    # keeps widened values consistent with exact corners of a larger box
    lo_int, hi_int = math.floor(b), math.ceil(b)
    if a < 1.0:
        lo_int, hi_int = hi_int, lo_int
    if abs(lo_int) <= EXACT_INT_LIMIT:
        down = max(down, _round_both(Fraction(a) ** lo_int).down)
    if abs(hi_int) <= EXACT_INT_LIMIT:
        up = min(up, _round_both(Fraction(a) ** hi_int).up)
    return PointPowerBounds(down, up)


def _corner(a: float, b: float, slack: int) -> PointPowerBounds:
    if a == 0.0 and b < 0:
        # supremum as a -> 0+; this corner never supplies the minimum
        return _POS_INF
    return pow_point_bounds(a, b, slack)


def _has_real_point(iv: Interval) -> bool:
    return not (iv.lo == iv.hi and math.isinf(iv.lo))


def p0(x: Interval, y: Interval, slack: int = DEFAULT_SLACK) -> Interval:
    """Enclosure of ``{a**b : a in x, a >= 0, b in y}``, excluding ``0**b`` for ``b < 0``."""
    xc = clamp_nonneg(x)
    if xc.empty or y.empty or not _has_real_point(xc) or not _has_real_point(y):
        return EMPTY
    a0, a1 = xc.lo, xc.hi
    b0, b1 = y.lo, y.hi

    if a1 == 0.0:
        # base is exactly {0}: image is {0} for positive b, {1} at b == 0
        lo, hi = INF, -INF
        if b1 > 0:
            lo, hi = 0.0, 0.0
        if b0 <= 0.0 <= b1:
            lo, hi = min(lo, 1.0), max(hi, 1.0)
        return EMPTY if lo > hi else Interval(lo, hi)

    corners = [_corner(a, b, slack) for a in (a0, a1) for b in (b0, b1)]
    lo = min(c.down for c in corners)
    hi = max(c.up for c in corners)
    if a0 == 0.0:
        if b1 > 0:
            lo = min(lo, 0.0)
        if b0 <= 0.0 <= b1:
            lo, hi = min(lo, 1.0), max(hi, 1.0)
        if b0 < 0:
            hi = INF
    return Interval(lo, hi)


def _certify(a: float, q: Fraction, approx: float) -> PointPowerBounds | None:
    """Adjacent floats around ``a**q`` checked by exact comparison, or None.

    For ``a > 0`` and ``d > 0``, ``c <= a**(n/d)`` iff ``c**d <= a**n``.
    """
    target = Fraction(a) ** q.numerator
    d = q.denominator

    def cmp(c: float) -> int:
        v = Fraction(c) ** d
        return (v > target) - (v < target)

    c = approx
    side = cmp(c)
    if side == 0:
        return PointPowerBounds(c, c)
    toward = INF if side < 0 else -INF
    for _ in range(_MAX_CERT_STEPS):
        nxt = math.nextafter(c, toward)
        if not (0.0 < nxt < INF):
            return None
        s = cmp(nxt)
        if s == 0:
            return PointPowerBounds(nxt, nxt)
        if s != side:
            return PointPowerBounds(c, nxt) if side < 0 else PointPowerBounds(nxt, c)
        c = nxt
    return None


def rational_point_bounds(a: float, q: Fraction, slack: int = DEFAULT_SLACK) -> PointPowerBounds:
    """Floats ``down <= a**q <= up`` for ``a >= 0`` and an exact rational ``q``.

    Moderate numerators and denominators give adjacent (or equal) floats;
    otherwise the result is the machine bracket over the exponent's
    enclosure.
    """
    q = Fraction(q)
    a = float(a)
    if q.denominator == 1 and abs(q.numerator) <= EXACT_INT_LIMIT:
        return pow_point_bounds(a, q.numerator, slack)
    if 0.0 < a < INF and a != 1.0 and q.denominator <= EXACT_ROOT_LIMIT and abs(q.numerator) <= EXACT_ROOT_LIMIT:
        qf = float(q)
        try:
            # correct for q != float(q) so the search starts within an ulp or two
            r = math.pow(a, qf) * math.exp(math.log(a) * float(q - Fraction(qf)))
        except OverflowError:
            r = INF
        if sys.float_info.min <= r < INF:
            got = _certify(a, q, r)
            if got is not None:
                return got
    enc = enclose_fraction(q)
    lo, hi = pow_point_bounds(a, enc.lo, slack), pow_point_bounds(a, enc.hi, slack)
    return PointPowerBounds(min(lo.down, hi.down), max(lo.up, hi.up))


def p0_rational(x: Interval, q: Fraction, slack: int = DEFAULT_SLACK) -> Interval:
    """Enclosure of ``{a**q : a in x, a >= 0}`` for an exact rational ``q``.

    Same set as :func:`p0` with a singleton exponent, without the loss from
    enclosing ``q`` in floats first.
    """
    q = Fraction(q)
    xc = clamp_nonneg(x)
    if xc.empty or not _has_real_point(xc):
        return EMPTY
    a0, a1 = xc.lo, xc.hi
    if q == 0:
        return Interval(1.0, 1.0)
    if q > 0:
        lo = 0.0 if a0 == 0.0 else rational_point_bounds(a0, q, slack).down
        return Interval(lo, rational_point_bounds(a1, q, slack).up)
    if a1 == 0.0:
        return EMPTY
    hi = INF if a0 == 0.0 else rational_point_bounds(a0, q, slack).up
    return Interval(rational_point_bounds(a1, q, slack).down, hi)


def enclose_fraction(q: Fraction) -> Interval:
    """Tightest float interval containing ``q``: a point, or one ulp wide."""
    try:
        near = float(q)
    except OverflowError:
        return Interval(DBL_MAX, INF) if q > 0 else Interval(-INF, -DBL_MAX)
    exact = Fraction(near)
    if exact == q:
        return Interval(near, near)
    if exact < q:
        return Interval(near, math.nextafter(near, INF))
    return Interval(math.nextafter(near, -INF), near)
