"""Parity classification of exponents.

A real value of ``x**y`` for negative ``x`` exists only when ``y`` is a
fraction with odd denominator; the parity of the numerator then decides
whether the result is ``|x|**y`` (even numerator) or ``-|x|**y`` (odd
numerator).  Fractions with even denominator and irrational exponents only
admit nonnegative bases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "ExponentKind",
    "reduce",
    "parse_rational",
    "classify_rational",
    "classify_machine",
]


@dataclass(frozen=True, slots=True)
class Rational:
    """Irreducible fraction ``num/den`` with ``den >= 1``.

    Construct through :func:`reduce` unless the pair is already canonical.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in canonical form; use reduce()")

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


class ExponentKind(enum.Enum):
    EVEN_INTEGER = "EvenInteger"
    ODD_INTEGER = "OddInteger"
    NON_INTEGER_DYADIC = "NonIntegerDyadic"
    FRACTION_EO = "FractionEO"
    FRACTION_OO = "FractionOO"
    FRACTION_OE = "FractionOE"
    IRRATIONAL = "Irrational"

    @property
    def even_branch(self) -> bool:
        """Negative bases contribute ``|x|**y``."""
        return self in (ExponentKind.EVEN_INTEGER, ExponentKind.FRACTION_EO)

    @property
    def odd_branch(self) -> bool:
        """Negative bases contribute ``-|x|**y``."""
        return self in (ExponentKind.ODD_INTEGER, ExponentKind.FRACTION_OO)

    def __str__(self) -> str:
        return self.value


def reduce(num: int, den: int) -> Rational:
    if den == 0:
        raise ZeroDivisionError("denominator must be nonzero")
    num, den = int(num), int(den)
    if den < 0:
        num, den = -num, -den
    g = math.gcd(num, den)
    return Rational(num // g, den // g)


def parse_rational(text: str) -> Rational:
    """Parse ``num/den`` or a bare integer."""
    s = text.strip()
    head, sep, tail = s.partition("/")
    try:
        num = int(head)
        den = int(tail) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}: expected num/den") from None
    if den == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return reduce(num, den)


def classify_rational(q: Rational | Fraction | tuple[int, int]) -> ExponentKind:
    """Parity class of an exact fraction; a ``(num, den)`` pair is reduced first."""
    if isinstance(q, tuple):
        q = reduce(*q)
    elif isinstance(q, Fraction):
        q = Rational(q.numerator, q.denominator)
    if q.den % 2 == 0:
        return ExponentKind.FRACTION_OE
    if q.num % 2 == 0:
        return ExponentKind.EVEN_INTEGER if q.den == 1 else ExponentKind.FRACTION_EO
    return ExponentKind.ODD_INTEGER if q.den == 1 else ExponentKind.FRACTION_OO


def classify_machine(y: float) -> ExponentKind:
    """Classify a finite binary64 exponent.

    Every finite float is a dyadic rational, so only the two integer classes
    and the even-denominator class can occur.
    """
    y = float(y)
    if not math.isfinite(y):
        raise ValueError(f"exponent must be finite, got {y!r}")
    if not y.is_integer():
        return ExponentKind.NON_INTEGER_DYADIC
    return ExponentKind.EVEN_INTEGER if int(y) % 2 == 0 else ExponentKind.ODD_INTEGER
